//! Global model checking over short-sighted models.
//!
//! Each subformula is evaluated to a [`StateSet`]. `X` is one application of
//! the (rational) controllable predecessor; `G` and `U` are greatest and
//! least fixpoints computed incrementally, so each state is re-examined only
//! when one of its successors changed status.
//!
//! Two semantic switches are exposed through [`McOptions`]:
//!
//! * [`Future::Strict`] evaluates `G`/`U` over positions strictly after the
//!   current one: the fixpoint `Z` is computed and the answer is the one-step
//!   predecessor of `Z`. [`Future::Reflexive`] includes the current position,
//!   which gives back `Z` itself when rationality is global.
//! * [`RatScope::Global`] restricts the coalition to non-dominated actions at
//!   every step of the fixpoint. [`RatScope::First`] restricts only the first
//!   step and lets the fixpoint use all actions.

pub mod oracle;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::logic::{Coalition, Formula, Modality};
use crate::model::pre::{can_force, coalition_mask};
use crate::model::{validate, Cgsp, ModelError, Rationality, StateId, ValidationReport};
use crate::stateset::StateSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RatScope {
    #[default]
    Global,
    First,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Future {
    #[default]
    Strict,
    Reflexive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct McOptions {
    pub rat_scope: RatScope,
    pub future: Future,
}

impl McOptions {
    /// All four option combinations.
    pub fn all() -> [McOptions; 4] {
        let mut out = [McOptions::default(); 4];
        let mut i = 0;
        for rat_scope in [RatScope::Global, RatScope::First] {
            for future in [Future::Strict, Future::Reflexive] {
                out[i] = McOptions { rat_scope, future };
                i += 1;
            }
        }
        out
    }
}

impl fmt::Display for RatScope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RatScope::Global => "global",
            RatScope::First => "first",
        })
    }
}

impl fmt::Display for Future {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Future::Strict => "strict",
            Future::Reflexive => "reflexive",
        })
    }
}

impl FromStr for RatScope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "global" => Ok(RatScope::Global),
            "first" => Ok(RatScope::First),
            _ => Err(format!("unknown rationality scope `{s}` (expected global or first)")),
        }
    }
}

impl FromStr for Future {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "strict" => Ok(Future::Strict),
            "reflexive" => Ok(Future::Reflexive),
            _ => Err(format!("unknown future mode `{s}` (expected strict or reflexive)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum McError {
    #[error("model is not a valid short-sighted game structure:\n{0}")]
    InvalidModel(ValidationReport),
    #[error("coalition mentions agent `{0}` unknown to the model")]
    UnknownAgent(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Result of a model-checking run.
#[derive(Clone, Debug)]
pub struct McOutcome {
    pub states: StateSet,
    /// Atoms of the formula that label no state (treated as false).
    pub unknown_atoms: BTreeSet<String>,
    /// Number of rounds taken by each fixpoint, in evaluation order.
    pub fixpoint_rounds: Vec<usize>,
}

/// Evaluates `phi` at every state of `model`.
pub fn check(model: &Cgsp, phi: &Formula, opts: McOptions) -> Result<McOutcome, McError> {
    let report = validate(model);
    if !report.is_ok() {
        return Err(McError::InvalidModel(report));
    }
    let mut checker = Checker {
        model,
        opts,
        rationality: None,
        fixpoint_rounds: Vec::new(),
    };
    let states = checker.eval(phi)?;
    let labelled: BTreeSet<&String> = model.state_ids().flat_map(|s| model.props(s)).collect();
    let unknown_atoms = phi
        .atoms()
        .into_iter()
        .filter(|p| !labelled.contains(p))
        .collect();
    Ok(McOutcome {
        states,
        unknown_atoms,
        fixpoint_rounds: checker.fixpoint_rounds,
    })
}

/// The set of states satisfying `phi`.
pub fn mc(model: &Cgsp, phi: &Formula, opts: McOptions) -> Result<StateSet, McError> {
    check(model, phi, opts).map(|o| o.states)
}

/// Whether `phi` holds at `w`.
pub fn eval_at(model: &Cgsp, w: StateId, phi: &Formula, opts: McOptions) -> Result<bool, McError> {
    if w.0 >= model.num_states() {
        return Err(ModelError::StateOutOfRange(w.0).into());
    }
    Ok(mc(model, phi, opts)?.contains(w))
}

/// Sorted names of the states in `set`.
pub fn state_names(model: &Cgsp, set: &StateSet) -> Vec<String> {
    let mut names: Vec<String> = set.iter().map(|s| model.state_name(s).to_string()).collect();
    names.sort();
    names
}

struct Checker<'a> {
    model: &'a Cgsp,
    opts: McOptions,
    rationality: Option<Rationality>,
    fixpoint_rounds: Vec<usize>,
}

impl Checker<'_> {
    fn n(&self) -> usize {
        self.model.num_states()
    }

    fn mask(&self, c: &Coalition) -> Result<Vec<bool>, McError> {
        let ids = c
            .members()
            .map(|a| {
                self.model
                    .agent_id(a)
                    .map_err(|_| McError::UnknownAgent(a.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(coalition_mask(self.model, &ids))
    }

    fn rationality(&mut self) -> &Rationality {
        let model = self.model;
        self.rationality
            .get_or_insert_with(|| Rationality::compute(model))
    }

    fn forces(&self, w: StateId, mask: &[bool], rational: bool, target: &StateSet) -> bool {
        let r = if rational { self.rationality.as_ref() } else { None };
        can_force(self.model, w, mask, r, |v| target.contains(v))
    }

    fn pre(&self, mask: &[bool], rational: bool, target: &StateSet) -> StateSet {
        StateSet::from_fn(self.n(), |w| self.forces(w, mask, rational, target))
    }

    fn eval(&mut self, phi: &Formula) -> Result<StateSet, McError> {
        let n = self.n();
        Ok(match phi {
            Formula::True => StateSet::full(n),
            Formula::False => StateSet::empty(n),
            Formula::Atom(p) => StateSet::from_fn(n, |s| self.model.has_prop(s, p)),
            Formula::Not(a) => self.eval(a)?.complement(),
            Formula::And(a, b) => self.eval(a)?.intersection(&self.eval(b)?),
            Formula::Or(a, b) => self.eval(a)?.union(&self.eval(b)?),
            Formula::Implies(a, b) => self.eval(a)?.complement().union(&self.eval(b)?),
            Formula::Iff(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                x.intersection(&y)
                    .union(&x.complement().intersection(&y.complement()))
            }
            Formula::Next(m, a) => {
                let target = self.eval(a)?;
                let mask = self.mask(&m.coalition)?;
                if m.rational {
                    self.rationality();
                }
                self.pre(&mask, m.rational, &target)
            }
            Formula::Always(m, a) => {
                let hold = self.eval(a)?;
                self.temporal(m, &hold, None)?
            }
            Formula::Until(m, a, b) => {
                let hold = self.eval(a)?;
                let goal = self.eval(b)?;
                self.temporal(m, &hold, Some(&goal))?
            }
        })
    }

    /// `G hold` when `goal` is `None`, otherwise `hold U goal`.
    fn temporal(
        &mut self,
        m: &Modality,
        hold: &StateSet,
        goal: Option<&StateSet>,
    ) -> Result<StateSet, McError> {
        let mask = self.mask(&m.coalition)?;
        if m.rational {
            self.rationality();
        }
        let inner_rational = m.rational && self.opts.rat_scope == RatScope::Global;
        let z = match goal {
            None => self.greatest(&mask, inner_rational, hold),
            Some(goal) => self.least(&mask, inner_rational, hold, goal),
        };
        let strict = self.pre(&mask, m.rational, &z);
        Ok(match (self.opts.future, goal) {
            (Future::Strict, _) => strict,
            (Future::Reflexive, None) => hold.intersection(&strict),
            (Future::Reflexive, Some(goal)) => goal.union(&hold.intersection(&strict)),
        })
    }

    /// Greatest `Z` with `Z = hold ∩ pre(Z)`.
    fn greatest(&mut self, mask: &[bool], rational: bool, hold: &StateSet) -> StateSet {
        let mut z = hold.clone();
        let mut candidates: Vec<StateId> = z.iter().collect();
        let mut rounds = 0;
        while !candidates.is_empty() {
            rounds += 1;
            let removed: Vec<StateId> = candidates
                .into_iter()
                .filter(|&w| !self.forces(w, mask, rational, &z))
                .collect();
            for &w in &removed {
                z.remove(w);
            }
            let mut next = StateSet::empty(self.n());
            for &w in &removed {
                for &u in self.model.predecessors(w) {
                    if z.contains(u) {
                        next.insert(u);
                    }
                }
            }
            candidates = next.iter().collect();
        }
        self.fixpoint_rounds.push(rounds);
        z
    }

    /// Least `Z` with `Z = goal ∪ (hold ∩ pre(Z))`.
    fn least(
        &mut self,
        mask: &[bool],
        rational: bool,
        hold: &StateSet,
        goal: &StateSet,
    ) -> StateSet {
        let mut z = goal.clone();
        let mut added: Vec<StateId> = z.iter().collect();
        let mut rounds = 0;
        loop {
            rounds += 1;
            let mut candidates = StateSet::empty(self.n());
            for &w in &added {
                for &u in self.model.predecessors(w) {
                    if hold.contains(u) && !z.contains(u) {
                        candidates.insert(u);
                    }
                }
            }
            added = candidates
                .iter()
                .filter(|&w| self.forces(w, mask, rational, &z))
                .collect();
            if added.is_empty() {
                break;
            }
            for &w in &added {
                z.insert(w);
            }
        }
        self.fixpoint_rounds.push(rounds);
        z
    }
}
