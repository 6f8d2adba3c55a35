//! Validity and satisfiability for the next-time fragment.
//!
//! A formula is valid iff every conjunct of its normal form is. A standard
//! disjunction is valid iff its propositional part is a tautology, or some
//! neat family of its negative capabilities (pairwise disjoint coalitions)
//! yields a valid lower-degree implication towards one positive capability
//! (see [`Decider::disjunction_valid`]). Failing disjunctions get a
//! countermodel realized from a blueprint, built in [`blueprint`].

mod blueprint;
mod suite;

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::logic::{normal_form, Capability, Coalition, Formula, LogicError, StandardDisjunction};
use crate::model::{json as model_json, Cgsp, ModelError, StateId};

pub use blueprint::{support, Blueprint};
pub use suite::{builtin_suite, SuiteEntry, SuiteReport};

use blueprint::Raw;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidityError {
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error("agent list is empty")]
    NoAgents,
    #[error("duplicate agent `{0}`")]
    DuplicateAgent(String),
    #[error("coalition mentions undeclared agent `{0}`")]
    UnknownAgent(String),
    #[error("disjunction is valid, it has no countermodel")]
    DisjunctionValid,
    #[error("countermodel construction failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Outcome of a validity query.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub valid: bool,
    /// A pointed model falsifying the formula, when it is not valid.
    pub countermodel: Option<(Cgsp, StateId)>,
}

/// Outcome of a satisfiability query.
#[derive(Clone, Debug)]
pub struct SatVerdict {
    pub satisfiable: bool,
    /// A pointed model satisfying the formula, when there is one.
    pub model: Option<(Cgsp, StateId)>,
}

/// Memoizing decision procedure over a fixed agent set.
#[derive(Debug)]
pub struct Decider {
    agents: Vec<String>,
    valid_memo: HashMap<Formula, bool>,
    model_memo: HashMap<Formula, Option<Rc<Raw>>>,
}

impl Decider {
    pub fn new(agents: Vec<String>) -> Result<Self, ValidityError> {
        if agents.is_empty() {
            return Err(ValidityError::NoAgents);
        }
        let mut seen = BTreeSet::new();
        for a in &agents {
            if !seen.insert(a) {
                return Err(ValidityError::DuplicateAgent(a.clone()));
            }
        }
        Ok(Self {
            agents,
            valid_memo: HashMap::new(),
            model_memo: HashMap::new(),
        })
    }

    pub fn agents(&self) -> &[String] {
        &self.agents
    }

    fn check_input(&self, phi: &Formula) -> Result<(), ValidityError> {
        // surfaces the fragment error with the offending subformula
        normal_form(phi)?;
        for c in phi.coalitions() {
            if let Some(a) = c.members().find(|a| !self.agents.iter().any(|b| b == a)) {
                return Err(ValidityError::UnknownAgent(a.to_string()));
            }
        }
        Ok(())
    }

    /// Whether `phi` holds at every state of every model.
    pub fn valid(&mut self, phi: &Formula) -> Result<bool, ValidityError> {
        self.check_input(phi)?;
        Ok(self.valid_rec(phi))
    }

    pub(crate) fn valid_rec(&mut self, phi: &Formula) -> bool {
        if let Some(&v) = self.valid_memo.get(phi) {
            return v;
        }
        let v = if phi.modal_degree() == 0 {
            tautology(phi)
        } else {
            normal_form(phi)
                .expect("fragment checked on entry")
                .iter()
                .all(|d| self.disjunction_valid(d))
        };
        self.valid_memo.insert(phi.clone(), v);
        v
    }

    /// Validity of a single standard disjunction.
    ///
    /// Besides a tautological `chi`, one of these must hold for some neat
    /// family (`X0` are the plain negative capabilities of the empty
    /// coalition, `Y0`/`Y1` the plain/rational positive ones of the grand
    /// coalition):
    ///
    /// 1. a plain positive `<<Cj>> X psi_j` and a neat family of plain and
    ///    rational negatives with coalitions inside `Cj` whose bodies imply
    ///    `psi_j` or some `Y0` body;
    /// 2. a rational positive `<<Cj>>^r X psi_j` and a neat family of
    ///    rational negatives inside `Cj` which, together with `X0`, imply
    ///    `psi_j` or some `Y0` body;
    /// 3. a neat family of rational negatives which, with `X0`, implies some
    ///    `Y0` or `Y1` body.
    ///
    /// The implication is monotone in the family, so only maximal neat
    /// families are tried.
    ///
    /// The check runs on [`pad`]ded disjunctions: without a grand-coalition
    /// `<<AGT>> X false` on the positive side, neat families that are
    /// jointly contradictory would never be compared against anything.
    pub fn disjunction_valid(&mut self, d: &StandardDisjunction) -> bool {
        if d.chi_is_tautology() {
            return true;
        }
        let d = &pad(d, &self.agents);
        let y0: Vec<Formula> = d.y0(&self.agents).into_iter().map(|j| d.pi[j].body.clone()).collect();
        let y1: Vec<Formula> = d
            .y1(&self.agents)
            .into_iter()
            .map(|j| d.pirat[j].body.clone())
            .collect();
        let x0: Vec<&Capability> = d.x0().into_iter().map(|i| &d.ni[i]).collect();

        for pj in &d.pi {
            let base: Vec<&Capability> = d
                .ni
                .iter()
                .chain(&d.nirat)
                .filter(|c| c.coalition.is_empty())
                .collect();
            let cands: Vec<&Capability> = d
                .ni
                .iter()
                .chain(&d.nirat)
                .filter(|c| !c.coalition.is_empty() && c.coalition.is_subset(&pj.coalition))
                .collect();
            let cons: Vec<Formula> = std::iter::once(pj.body.clone()).chain(y0.iter().cloned()).collect();
            if self.some_family_implies(&base, &cands, &cons) {
                return true;
            }
        }

        let rat_base: Vec<&Capability> = x0
            .iter()
            .copied()
            .chain(d.nirat.iter().filter(|c| c.coalition.is_empty()))
            .collect();
        for pj in &d.pirat {
            let cands: Vec<&Capability> = d
                .nirat
                .iter()
                .filter(|c| !c.coalition.is_empty() && c.coalition.is_subset(&pj.coalition))
                .collect();
            let cons: Vec<Formula> = std::iter::once(pj.body.clone()).chain(y0.iter().cloned()).collect();
            if self.some_family_implies(&rat_base, &cands, &cons) {
                return true;
            }
        }

        let cands: Vec<&Capability> = d.nirat.iter().filter(|c| !c.coalition.is_empty()).collect();
        let cons: Vec<Formula> = y0.iter().chain(&y1).cloned().collect();
        self.some_family_implies(&rat_base, &cands, &cons)
    }

    fn some_family_implies(
        &mut self,
        base: &[&Capability],
        cands: &[&Capability],
        cons: &[Formula],
    ) -> bool {
        let coalitions: Vec<&Coalition> = cands.iter().map(|c| &c.coalition).collect();
        for family in maximal_neat_families(&coalitions) {
            let mut ante: BTreeSet<&Formula> = base.iter().map(|c| &c.body).collect();
            ante.extend(family.iter().map(|&i| &cands[i].body));
            ante.remove(&Formula::True);
            let cons: BTreeSet<&Formula> = cons.iter().filter(|f| **f != Formula::False).collect();
            let imp = Formula::conj(ante.into_iter().cloned())
                .implies(Formula::disj(cons.into_iter().cloned()));
            if self.valid_rec(&imp) {
                return true;
            }
        }
        false
    }

    /// Verdict for `phi`, with a countermodel when it is not valid.
    pub fn verdict(&mut self, phi: &Formula) -> Result<Verdict, ValidityError> {
        self.check_input(phi)?;
        if self.valid_rec(phi) {
            return Ok(Verdict {
                valid: true,
                countermodel: None,
            });
        }
        let raw = self.falsifying_raw(phi)?;
        Ok(Verdict {
            valid: false,
            countermodel: Some((raw.to_model(&self.agents)?, StateId(raw.root))),
        })
    }

    /// Satisfiability of `phi`, with a model when it is satisfiable.
    pub fn satisfiability(&mut self, phi: &Formula) -> Result<SatVerdict, ValidityError> {
        self.check_input(phi)?;
        match self.satisfying_raw(phi)? {
            Some(raw) => Ok(SatVerdict {
                satisfiable: true,
                model: Some((raw.to_model(&self.agents)?, StateId(raw.root))),
            }),
            None => Ok(SatVerdict {
                satisfiable: false,
                model: None,
            }),
        }
    }

    /// A model of `phi` rooted at its first state, if `phi` is satisfiable.
    fn satisfying_raw(&mut self, phi: &Formula) -> Result<Option<Rc<Raw>>, ValidityError> {
        if let Some(r) = self.model_memo.get(phi) {
            return Ok(r.clone());
        }
        let out = if phi.modal_degree() == 0 {
            assignment(phi, true).map(|t| Rc::new(Raw::single(t, self.agents.len())))
        } else {
            let negated = phi.clone().not();
            let nf = normal_form(&negated)?;
            match nf.iter().find(|d| !self.disjunction_valid(d)) {
                Some(d) => Some(Rc::new(self.countermodel_raw(d)?)),
                None => None,
            }
        };
        self.model_memo.insert(phi.clone(), out.clone());
        Ok(out)
    }

    fn falsifying_raw(&mut self, phi: &Formula) -> Result<Raw, ValidityError> {
        if phi.modal_degree() == 0 {
            let t = assignment(phi, false).ok_or(ValidityError::DisjunctionValid)?;
            return Ok(Raw::single(t, self.agents.len()));
        }
        let nf = normal_form(phi)?;
        match nf.iter().find(|d| !self.disjunction_valid(d)) {
            Some(d) => self.countermodel_raw(d),
            None => Err(ValidityError::DisjunctionValid),
        }
    }

    fn countermodel_raw(&mut self, d: &StandardDisjunction) -> Result<Raw, ValidityError> {
        if self.disjunction_valid(d) {
            return Err(ValidityError::DisjunctionValid);
        }
        let root_true: BTreeSet<String> = d
            .chi
            .iter()
            .filter(|l| !l.positive)
            .map(|l| l.atom.clone())
            .collect();
        let modal_free =
            d.ni.is_empty() && d.nirat.is_empty() && d.pi.is_empty() && d.pirat.is_empty();
        if modal_free {
            return Ok(Raw::single(root_true, self.agents.len()));
        }
        let bp = Blueprint::new(d, &self.agents);
        let mut subs = Vec::with_capacity(bp.clist.len());
        for (sigma, goal) in &bp.clist {
            let sub = self.satisfying_raw(goal)?.ok_or_else(|| {
                ValidityError::Internal(format!("blueprint entry `{goal}` is unsatisfiable"))
            })?;
            subs.push((sigma.clone(), goal.clone(), sub));
        }
        Ok(Raw::realize(root_true, &bp, subs))
    }

    /// Countermodel of a disjunction that fails the validity condition.
    pub fn build_countermodel(
        &mut self,
        d: &StandardDisjunction,
    ) -> Result<(Cgsp, StateId), ValidityError> {
        let raw = self.countermodel_raw(d)?;
        Ok((raw.to_model(&self.agents)?, StateId(raw.root)))
    }
}

fn eval_prop(phi: &Formula, true_atoms: &BTreeSet<String>) -> bool {
    match phi {
        Formula::True => true,
        Formula::False => false,
        Formula::Atom(p) => true_atoms.contains(p),
        Formula::Not(a) => !eval_prop(a, true_atoms),
        Formula::And(a, b) => eval_prop(a, true_atoms) && eval_prop(b, true_atoms),
        Formula::Or(a, b) => eval_prop(a, true_atoms) || eval_prop(b, true_atoms),
        Formula::Implies(a, b) => !eval_prop(a, true_atoms) || eval_prop(b, true_atoms),
        Formula::Iff(a, b) => eval_prop(a, true_atoms) == eval_prop(b, true_atoms),
        _ => unreachable!("propositional evaluation of a strategic formula"),
    }
}

/// First assignment (as its set of true atoms) giving `phi` the value
/// `target`.
fn assignment(phi: &Formula, target: bool) -> Option<BTreeSet<String>> {
    let atoms: Vec<String> = phi.atoms().into_iter().collect();
    assert!(atoms.len() < 32, "too many atoms for a truth table");
    (0u32..1 << atoms.len()).find_map(|bits| {
        let t: BTreeSet<String> = atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, a)| a.clone())
            .collect();
        (eval_prop(phi, &t) == target).then_some(t)
    })
}

fn tautology(phi: &Formula) -> bool {
    assignment(phi, false).is_none()
}

/// Adds the trivially true `<<>>^r X true` to the rational negatives and the
/// unsatisfiable `<<AGT>> X false`, `<<AGT>>^r X false` to the positives,
/// unless already present. The result is equivalent to `d`.
pub fn pad(d: &StandardDisjunction, agents: &[String]) -> StandardDisjunction {
    let mut out = d.clone();
    let top = Capability {
        coalition: Coalition::empty(),
        body: Formula::True,
    };
    let bottom = Capability {
        coalition: Coalition::new(agents.iter().cloned()),
        body: Formula::False,
    };
    if !out.nirat.contains(&top) {
        out.nirat.push(top);
    }
    if !out.pi.contains(&bottom) {
        out.pi.push(bottom.clone());
    }
    if !out.pirat.contains(&bottom) {
        out.pirat.push(bottom);
    }
    out
}

/// All inclusion-maximal subfamilies with pairwise disjoint coalitions, as
/// index lists into `coalitions`.
pub fn maximal_neat_families(coalitions: &[&Coalition]) -> Vec<Vec<usize>> {
    fn go(
        coalitions: &[&Coalition],
        k: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == coalitions.len() {
            let maximal = (0..coalitions.len()).all(|e| {
                chosen.contains(&e) || chosen.iter().any(|&c| !coalitions[c].is_disjoint(coalitions[e]))
            });
            if maximal {
                out.push(chosen.clone());
            }
            return;
        }
        if chosen.iter().all(|&c| coalitions[c].is_disjoint(coalitions[k])) {
            chosen.push(k);
            go(coalitions, k + 1, chosen, out);
            chosen.pop();
        }
        go(coalitions, k + 1, chosen, out);
    }
    let mut out = Vec::new();
    go(coalitions, 0, &mut Vec::new(), &mut out);
    out
}

pub fn is_valid(phi: &Formula, agents: &[String]) -> Result<Verdict, ValidityError> {
    Decider::new(agents.to_vec())?.verdict(phi)
}

pub fn is_satisfiable(phi: &Formula, agents: &[String]) -> Result<SatVerdict, ValidityError> {
    Decider::new(agents.to_vec())?.satisfiability(phi)
}

pub fn build_countermodel(
    d: &StandardDisjunction,
    agents: &[String],
) -> Result<(Cgsp, StateId), ValidityError> {
    Decider::new(agents.to_vec())?.build_countermodel(d)
}

/// `{"formula", "valid", "countermodel"}` with the countermodel in the model
/// file format.
pub fn verdict_json(formula: &Formula, verdict: &Verdict) -> Value {
    json!({
        "formula": formula.to_string(),
        "valid": verdict.valid,
        "countermodel": verdict.countermodel.as_ref().map(|(m, _)| model_json::to_value(m)),
    })
}

/// `{"formula", "satisfiable", "model"}`.
pub fn sat_json(formula: &Formula, verdict: &SatVerdict) -> Value {
    json!({
        "formula": formula.to_string(),
        "satisfiable": verdict.satisfiable,
        "model": verdict.model.as_ref().map(|(m, _)| model_json::to_value(m)),
    })
}
