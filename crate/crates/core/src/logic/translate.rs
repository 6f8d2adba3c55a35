use super::formula::{Formula, Modality};
use super::{LogicError, RESERVED_PREFIX};

/// The atom marking that `agent` plays rationally.
pub fn rat_atom(agent: &str) -> Formula {
    Formula::atom(format!("{RESERVED_PREFIX}{agent}"))
}

/// Conjunction of `rat_i` over every agent.
pub fn rat_all(agents: &[String]) -> Formula {
    Formula::conj(agents.iter().map(|a| rat_atom(a)))
}

/// Rewrites rational operators into plain ones whose targets are guarded by
/// the rationality atoms of all agents.
pub fn translate_tr(phi: &Formula, agents: &[String]) -> Result<Formula, LogicError> {
    let mut reserved = None;
    phi.visit(&mut |f| {
        if let Formula::Atom(p) = f {
            if p.starts_with(RESERVED_PREFIX) && reserved.is_none() {
                reserved = Some(p.clone());
            }
        }
    });
    if let Some(p) = reserved {
        return Err(LogicError::ReservedAtom(p));
    }
    Ok(tr(phi, agents))
}

fn guarded(agents: &[String], f: Formula) -> Formula {
    Formula::conj(agents.iter().map(|a| rat_atom(a)).chain([f]))
}

fn tr(phi: &Formula, agents: &[String]) -> Formula {
    let t = |f: &Formula| tr(f, agents);
    match phi {
        Formula::True | Formula::False | Formula::Atom(_) => phi.clone(),
        Formula::Not(a) => t(a).not(),
        Formula::And(a, b) => t(a).and(t(b)),
        Formula::Or(a, b) => t(a).or(t(b)),
        Formula::Implies(a, b) => t(a).implies(t(b)),
        Formula::Iff(a, b) => t(a).iff(t(b)),
        Formula::Next(m, a) if m.rational => {
            Formula::next(Modality::plain(m.coalition.clone()), guarded(agents, t(a)))
        }
        Formula::Always(m, a) if m.rational => {
            Formula::always(Modality::plain(m.coalition.clone()), guarded(agents, t(a)))
        }
        Formula::Until(m, a, b) if m.rational => Formula::until(
            Modality::plain(m.coalition.clone()),
            guarded(agents, t(a)),
            guarded(agents, t(b)),
        ),
        Formula::Next(m, a) => Formula::next(m.clone(), t(a)),
        Formula::Always(m, a) => Formula::always(m.clone(), t(a)),
        Formula::Until(m, a, b) => Formula::until(m.clone(), t(a), t(b)),
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_formula;
    use super::*;

    fn agents() -> Vec<String> {
        vec!["1".into(), "2".into()]
    }

    fn tr_text(s: &str) -> String {
        translate_tr(&parse_formula(s, &agents()).unwrap(), &agents())
            .unwrap()
            .to_string()
    }

    #[test]
    fn rational_next_gets_guard() {
        assert_eq!(tr_text("<<1>>^r X p"), "<<1>> X (rat_1 & rat_2 & p)");
    }

    #[test]
    fn rational_until_guards_both_sides() {
        assert_eq!(
            tr_text("<<1>>^r (p U q)"),
            "<<1>> ((rat_1 & rat_2 & p) U (rat_1 & rat_2 & q))"
        );
    }

    #[test]
    fn plain_formulas_untouched() {
        for s in ["p", "<<1>> X p -> <<>> G !q", "<<1,2>> (p U <<2>> X q)"] {
            let f = parse_formula(s, &agents()).unwrap();
            assert_eq!(translate_tr(&f, &agents()).unwrap(), f);
        }
    }

    #[test]
    fn reserved_atoms_rejected() {
        let f = Formula::atom("rat_1");
        assert_eq!(
            translate_tr(&f, &agents()).unwrap_err(),
            LogicError::ReservedAtom("rat_1".into())
        );
    }
}
