//! Brute-force reference semantics.
//!
//! Strategic operators are evaluated by enumerating coalition strategies and
//! inspecting every outcome path, without controllable-predecessor operators
//! or fixpoints. A strategy here is a first action at the evaluation state
//! followed by a memoryless continuation; that is enough for safety and
//! reachability objectives on finite models, including the case where the
//! first action is constrained by rationality and the continuation is not.
//! Dominance is recomputed directly from the transition map.

use thiserror::Error;

use super::{Future, McError, McOptions, RatScope};
use crate::logic::{Formula, Modality};
use crate::model::{validate, ActionId, AgentId, Cgsp, JointAction, Odometer, StateId};
use crate::stateset::StateSet;

/// Default for `|states| * |actions|^|agents|`.
pub const DEFAULT_BOUND: u64 = 4096;

/// Refuse when more coalition strategies than this would be enumerated.
pub const STRATEGY_LIMIT: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("model too large for the oracle: size {size} exceeds bound {bound}")]
    BoundExceeded { size: u64, bound: u64 },
    #[error("oracle refuses to enumerate {count} strategies")]
    TooManyStrategies { count: u64 },
    #[error(transparent)]
    Check(#[from] McError),
}

/// `|states| * |actions|^|agents|`, saturating.
pub fn model_size(model: &Cgsp) -> u64 {
    let actions = model.actions().len() as u64;
    let per_state = (0..model.num_agents()).fold(1u64, |acc, _| acc.saturating_mul(actions));
    (model.num_states() as u64).saturating_mul(per_state)
}

/// States satisfying `phi`, by strategy enumeration.
pub fn oracle_mc(
    model: &Cgsp,
    phi: &Formula,
    opts: McOptions,
    bound: u64,
) -> Result<StateSet, OracleError> {
    let size = model_size(model);
    if size > bound {
        return Err(OracleError::BoundExceeded { size, bound });
    }
    let report = validate(model);
    if !report.is_ok() {
        return Err(McError::InvalidModel(report).into());
    }
    let oracle = Oracle {
        model,
        opts,
        rational: non_dominated(model),
    };
    oracle.eval(phi)
}

/// `[state][agent]` actions not strictly dominated.
fn non_dominated(model: &Cgsp) -> Vec<Vec<Vec<ActionId>>> {
    model
        .state_ids()
        .map(|w| {
            let moves = model.moves(w);
            model
                .agent_ids()
                .map(|i| {
                    let mine: Vec<ActionId> = model.choice_set(i, w).expect("valid ids").to_vec();
                    let dominates = |better: ActionId, worse: ActionId| {
                        moves.iter().filter(|(j, _)| j.get(i) == worse).all(|(j, &lo)| {
                            let mut alt = j.clone();
                            alt.0[i.0] = better;
                            match moves.get(&alt) {
                                Some(&hi) => model.rank(i, w, lo) < model.rank(i, w, hi),
                                None => true,
                            }
                        })
                    };
                    mine.iter()
                        .copied()
                        .filter(|&a| !mine.iter().any(|&b| b != a && dominates(b, a)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

struct Oracle<'a> {
    model: &'a Cgsp,
    opts: McOptions,
    rational: Vec<Vec<Vec<ActionId>>>,
}

impl Oracle<'_> {
    fn members(&self, m: &Modality) -> Result<Vec<AgentId>, OracleError> {
        m.coalition
            .members()
            .map(|a| {
                self.model
                    .agent_id(a)
                    .map_err(|_| McError::UnknownAgent(a.to_string()).into())
            })
            .collect()
    }

    fn options(&self, w: StateId, members: &[AgentId], rational: bool) -> Vec<Vec<ActionId>> {
        members
            .iter()
            .map(|&a| {
                if rational {
                    self.rational[w.0][a.0].clone()
                } else {
                    self.model.choice_set(a, w).expect("valid ids").to_vec()
                }
            })
            .collect()
    }

    /// Targets of all joint actions at `w` agreeing with `pick` on `members`.
    fn outcomes(&self, w: StateId, members: &[AgentId], pick: &[ActionId]) -> Vec<StateId> {
        let agrees = |j: &JointAction| members.iter().zip(pick).all(|(&a, &act)| j.get(a) == act);
        let mut out: Vec<StateId> = self
            .model
            .moves(w)
            .iter()
            .filter(|(j, _)| agrees(j))
            .map(|(_, &v)| v)
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Outcome sets of every coalition action available at `w`.
    fn first_steps(&self, w: StateId, members: &[AgentId], rational: bool) -> Vec<Vec<StateId>> {
        let opts = self.options(w, members, rational);
        Odometer::new(opts.iter().map(Vec::len).collect())
            .map(|pos| {
                let pick: Vec<ActionId> = pos.iter().zip(&opts).map(|(&p, o)| o[p]).collect();
                self.outcomes(w, members, &pick)
            })
            .collect()
    }

    fn eval(&self, phi: &Formula) -> Result<StateSet, OracleError> {
        let n = self.model.num_states();
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
                StateSet::from_fn(n, |s| x.contains(s) == y.contains(s))
            }
            Formula::Next(m, a) => {
                let target = self.eval(a)?;
                let members = self.members(m)?;
                StateSet::from_fn(n, |w| {
                    self.first_steps(w, &members, m.rational)
                        .iter()
                        .any(|out| out.iter().all(|&v| target.contains(v)))
                })
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

    fn temporal(
        &self,
        m: &Modality,
        hold: &StateSet,
        goal: Option<&StateSet>,
    ) -> Result<StateSet, OracleError> {
        let model = self.model;
        let n = model.num_states();
        let members = self.members(m)?;
        let continue_rational = m.rational && self.opts.rat_scope == RatScope::Global;

        // per state, the coalition actions a continuation may use
        let cont: Vec<Vec<Vec<ActionId>>> = model
            .state_ids()
            .map(|s| {
                let opts = self.options(s, &members, continue_rational);
                Odometer::new(opts.iter().map(Vec::len).collect())
                    .map(|pos| pos.iter().zip(&opts).map(|(&p, o)| o[p]).collect())
                    .collect()
            })
            .collect();
        let count = cont
            .iter()
            .fold(1u64, |acc, c| acc.saturating_mul(c.len() as u64));
        if count > STRATEGY_LIMIT {
            return Err(OracleError::TooManyStrategies { count });
        }
        let cont_out: Vec<Vec<Vec<StateId>>> = model
            .state_ids()
            .map(|s| {
                cont[s.0]
                    .iter()
                    .map(|pick| self.outcomes(s, &members, pick))
                    .collect()
            })
            .collect();
        let firsts: Vec<Vec<Vec<StateId>>> = model
            .state_ids()
            .map(|w| self.first_steps(w, &members, m.rational))
            .collect();

        let mut strict = StateSet::empty(n);
        for choice in Odometer::new(cont.iter().map(Vec::len).collect()) {
            let graph: Vec<&[StateId]> = (0..n).map(|s| cont_out[s][choice[s]].as_slice()).collect();
            let good = StateSet::from_fn(n, |s| match goal {
                None => always_from(&graph, hold, s),
                Some(goal) => until_from(&graph, hold, goal, s),
            });
            for w in model.state_ids() {
                if !strict.contains(w)
                    && firsts[w.0]
                        .iter()
                        .any(|out| out.iter().all(|&v| good.contains(v)))
                {
                    strict.insert(w);
                }
            }
        }
        Ok(match (self.opts.future, goal) {
            (Future::Strict, _) => strict,
            (Future::Reflexive, None) => hold.intersection(&strict),
            (Future::Reflexive, Some(goal)) => goal.union(&hold.intersection(&strict)),
        })
    }
}

/// Every path from `s` (position 0 included) stays inside `hold`.
fn always_from(graph: &[&[StateId]], hold: &StateSet, s: StateId) -> bool {
    let mut seen = vec![false; graph.len()];
    let mut stack = vec![s];
    seen[s.0] = true;
    while let Some(u) = stack.pop() {
        if !hold.contains(u) {
            return false;
        }
        for &v in graph[u.0] {
            if !seen[v.0] {
                seen[v.0] = true;
                stack.push(v);
            }
        }
    }
    true
}

/// Every path from `s` reaches `goal` (position 0 included) through `hold`.
fn until_from(graph: &[&[StateId]], hold: &StateSet, goal: &StateSet, s: StateId) -> bool {
    // 0 = unvisited, 1 = on the DFS stack, 2 = done
    fn visit(
        graph: &[&[StateId]],
        hold: &StateSet,
        goal: &StateSet,
        u: StateId,
        color: &mut [u8],
    ) -> bool {
        if goal.contains(u) {
            return true;
        }
        if !hold.contains(u) {
            return false;
        }
        match color[u.0] {
            1 => return false,
            2 => return true,
            _ => {}
        }
        color[u.0] = 1;
        for &v in graph[u.0] {
            if !visit(graph, hold, goal, v, color) {
                return false;
            }
        }
        color[u.0] = 2;
        true
    }
    let mut color = vec![0u8; graph.len()];
    visit(graph, hold, goal, s, &mut color)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;
    use crate::mc::mc;
    use crate::model::fixtures::m_cross;
    use crate::model::CgsBuilder;

    #[test]
    fn agrees_on_running_example() {
        let m = m_cross();
        for text in ["<<v1>>^r X !crash", "<<v1>>^r (true U c1)", "<<v1>>^r G !c1"] {
            let phi = parse_formula(text, m.agents()).unwrap();
            for opts in McOptions::all() {
                assert_eq!(
                    oracle_mc(&m, &phi, opts, DEFAULT_BOUND).unwrap(),
                    mc(&m, &phi, opts).unwrap(),
                    "{text} {opts:?}"
                );
            }
        }
    }

    #[test]
    fn agrees_on_single_state_loop() {
        let mut b = CgsBuilder::new(["1", "2"], ["a"]).unwrap();
        b.add_state("s", ["p"]).unwrap();
        b.add_transition_named("s", &["a", "a"], "s").unwrap();
        let m = Cgsp::indifferent(b.build().unwrap());
        let agents = m.agents().to_vec();
        for text in [
            "<<1>> X p",
            "<<1>>^r X !p",
            "<<>> G p",
            "<<2>>^r G p",
            "<<1,2>> (p U !p)",
            "<<>>^r (!p U p)",
        ] {
            let phi = parse_formula(text, &agents).unwrap();
            for opts in McOptions::all() {
                assert_eq!(
                    oracle_mc(&m, &phi, opts, DEFAULT_BOUND).unwrap(),
                    mc(&m, &phi, opts).unwrap(),
                    "{text} {opts:?}"
                );
            }
        }
    }

    #[test]
    fn refuses_large_models() {
        let m = m_cross();
        let err = oracle_mc(&m, &Formula::True, McOptions::default(), 10).unwrap_err();
        assert_eq!(err, OracleError::BoundExceeded { size: 20, bound: 10 });
    }

    #[test]
    fn rational_first_step_may_loop_back() {
        // agent 1 at s: `a` strictly beats `b` but may loop back to s
        // when agent 2 plays `x`; `b` reaches a goal state outright
        let mut b = CgsBuilder::new(["1", "2"], ["a", "b", "x", "y"]).unwrap();
        b.add_state("s", Vec::<String>::new()).unwrap();
        b.add_state("g", ["goal"]).unwrap();
        b.add_state("h", ["goal"]).unwrap();
        b.add_transition_named("s", &["a", "x"], "s").unwrap();
        b.add_transition_named("s", &["a", "y"], "g").unwrap();
        b.add_transition_named("s", &["b", "x"], "h").unwrap();
        b.add_transition_named("s", &["b", "y"], "h").unwrap();
        b.add_transition_named("g", &["a", "x"], "g").unwrap();
        b.add_transition_named("h", &["a", "x"], "h").unwrap();
        let cgs = b.build().unwrap();
        let ranks = [(StateId(0), 2), (StateId(1), 1), (StateId(2), 0)]
            .into_iter()
            .collect();
        let block = crate::model::RankBlock {
            agent: AgentId(0),
            state: StateId(0),
            ranks,
        };
        let m = Cgsp::new(cgs, [block]).unwrap();
        let phi = parse_formula("<<1>>^r (true U goal)", m.agents()).unwrap();
        for opts in McOptions::all() {
            assert_eq!(
                oracle_mc(&m, &phi, opts, DEFAULT_BOUND).unwrap(),
                mc(&m, &phi, opts).unwrap(),
                "{opts:?}"
            );
        }
        let first = McOptions {
            rat_scope: RatScope::First,
            ..McOptions::default()
        };
        assert!(mc(&m, &phi, first).unwrap().contains(StateId(0)));
        assert!(!mc(&m, &phi, McOptions::default()).unwrap().contains(StateId(0)));
    }
}
