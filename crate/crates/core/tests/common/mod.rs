//! Checks shared by the property tests and the acceptance run.
#![allow(dead_code)]

use std::path::PathBuf;

use ratcap_core::logic::{rat_atom, translate_tr};
use ratcap_core::mc::{eval_at, mc, McOptions};
use ratcap_core::model::{adjoint_transform, dominated_actions, json, pre, pre_rat, validate};
use ratcap_core::{AgentId, Cgsp, Coalition, Formula, Modality, StateId, StateSet};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn m_cross() -> Cgsp {
    let text = std::fs::read_to_string(fixture("m_cross.json")).expect("fixture readable");
    json::from_json(&text).expect("fixture parses")
}

/// `⋀ᵢ <<i>> X rat_i ∧ tr(φ)`.
pub fn embed(phi: &Formula, agents: &[String]) -> Formula {
    let guards = agents
        .iter()
        .map(|a| Formula::next(Modality::plain(Coalition::new([a.as_str()])), rat_atom(a)));
    Formula::conj(guards.chain([translate_tr(phi, agents).expect("no reserved atoms")]))
}

fn coalitions(m: &Cgsp) -> Vec<Vec<AgentId>> {
    let k = m.agents().len();
    (0..1u32 << k)
        .map(|mask| (0..k).filter(|a| mask >> a & 1 == 1).map(AgentId).collect())
        .collect()
}

fn subset(a: &[AgentId], b: &[AgentId]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn disjoint(a: &[AgentId], b: &[AgentId]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

fn union(a: &[AgentId], b: &[AgentId]) -> Vec<AgentId> {
    let mut out: Vec<AgentId> = a.iter().chain(b).copied().collect();
    out.sort();
    out.dedup();
    out
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// The one-step operator laws for targets `q`, `q2` over every coalition.
pub fn check_pre_algebra(m: &Cgsp, q: &StateSet, q2: &StateSet) -> Result<(), String> {
    let n = m.num_states();
    let all = StateSet::full(n);
    let none = StateSet::empty(n);
    let grand: Vec<AgentId> = m.agent_ids().collect();
    let cs = coalitions(m);
    for c in &cs {
        for (name, op) in [("pre", pre as fn(&Cgsp, &[AgentId], &StateSet) -> StateSet), ("pre_rat", pre_rat)] {
            ensure!(op(m, c, &all) == all, "{name}({c:?}, all) is not all");
            ensure!(op(m, c, &none).is_empty(), "{name}({c:?}, empty) is not empty");
            ensure!(
                op(m, c, &q.intersection(q2)).is_subset(&op(m, c, q))
                    && op(m, c, q).is_subset(&op(m, c, &q.union(q2))),
                "{name} not monotone in the target for {c:?}"
            );
            let bar: Vec<AgentId> = m.agent_ids().filter(|x| !c.contains(x)).collect();
            ensure!(
                op(m, c, q).intersection(&op(m, &bar, &q.complement())).is_empty(),
                "{name} violates regularity for {c:?}"
            );
        }
        ensure!(pre_rat(m, c, q).is_subset(&pre(m, c, q)), "pre_rat not within pre for {c:?}");
        ensure!(
            pre(m, c, &q.union(q2)).is_subset(&pre(m, c, q).union(&pre(m, &grand, q2))),
            "crown fails for {c:?}"
        );
        for d in &cs {
            if subset(c, d) {
                ensure!(pre(m, c, q).is_subset(&pre(m, d, q)), "pre not monotone {c:?} {d:?}");
                ensure!(
                    pre_rat(m, c, q).is_subset(&pre_rat(m, d, q)),
                    "pre_rat not monotone {c:?} {d:?}"
                );
            }
            if disjoint(c, d) {
                let cd = union(c, d);
                let both = q.intersection(q2);
                ensure!(
                    pre(m, c, q).intersection(&pre(m, d, q2)).is_subset(&pre(m, &cd, &both)),
                    "pre not superadditive {c:?} {d:?}"
                );
                ensure!(
                    pre_rat(m, c, q)
                        .intersection(&pre_rat(m, d, q2))
                        .is_subset(&pre_rat(m, &cd, &both)),
                    "pre_rat not superadditive {c:?} {d:?}"
                );
            }
        }
    }
    ensure!(pre_rat(m, &[], q) == pre(m, &[], q), "empty coalition rational differs from plain");
    ensure!(
        pre_rat(m, &grand, &q.union(q2))
            .is_subset(&pre_rat(m, &grand, q).union(&pre_rat(m, &grand, q2))),
        "grand coalition rational choice not deterministic"
    );
    for w in m.state_ids() {
        for a in m.agent_ids() {
            let dominated = dominated_actions(m, a, w).map_err(|e| e.to_string())?;
            let choices = m.choice_set(a, w).map_err(|e| e.to_string())?;
            ensure!(dominated.len() < choices.len(), "every action of {a:?} dominated at {w:?}");
        }
    }
    Ok(())
}

/// Truth of each formula at `w` equals its truth at every copy of `w`.
pub fn check_transform(m: &Cgsp, formulas: &[Formula]) -> Result<(), String> {
    let t = adjoint_transform(m).map_err(|e| e.to_string())?;
    ensure!(validate(&t).is_ok(), "transformed model invalid: {}", validate(&t));
    let copies = t.num_states() / m.num_states();
    ensure!(
        copies == m.actions().len().pow(m.agents().len() as u32),
        "unexpected copy count {copies}"
    );
    for phi in formulas {
        let orig = mc(m, phi, McOptions::default()).map_err(|e| e.to_string())?;
        for w in t.state_ids() {
            let got = eval_at(&t, w, phi, McOptions::default()).map_err(|e| e.to_string())?;
            ensure!(
                got == orig.contains(StateId(w.0 / copies)),
                "{phi} differs at copy {}",
                t.state_name(w)
            );
        }
    }
    Ok(())
}

/// Translation variant guarding a rational operator with the `rat_i` of its
/// own coalition members only.
pub fn translate_members(phi: &Formula) -> Formula {
    let t = translate_members;
    match phi {
        Formula::Not(a) => t(a).not(),
        Formula::And(a, b) => t(a).and(t(b)),
        Formula::Or(a, b) => t(a).or(t(b)),
        Formula::Implies(a, b) => t(a).implies(t(b)),
        Formula::Iff(a, b) => t(a).iff(t(b)),
        Formula::Next(m, a) if m.rational => {
            let guarded = Formula::conj(m.coalition.members().map(rat_atom).chain([t(a)]));
            Formula::next(Modality::plain(m.coalition.clone()), guarded)
        }
        Formula::Next(m, a) => Formula::next(m.clone(), t(a)),
        f => f.clone(),
    }
}

/// `⋀ᵢ <<i>> X rat_i` asserted at the root and under every `<<>> X` prefix
/// shorter than `depth`, conjoined with `translate_members(φ)`.
pub fn embed_layered(phi: &Formula, agents: &[String]) -> Formula {
    let guard = Formula::conj(
        agents
            .iter()
            .map(|a| Formula::next(Modality::plain(Coalition::new([a.as_str()])), rat_atom(a))),
    );
    let mut layers = vec![guard];
    for _ in 1..phi.modal_degree().max(1) {
        let inner = layers.last().expect("nonempty").clone();
        layers.push(Formula::next(Modality::plain(Coalition::empty()), inner));
    }
    Formula::conj(layers.into_iter().chain([translate_members(phi)]))
}
