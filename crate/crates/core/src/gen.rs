//! Random models and formulas for property tests and benchmarks.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::logic::{Coalition, Formula, Modality};
use crate::model::{ActionId, AgentId, CgsBuilder, Cgsp, JointAction, Odometer, RankBlock, StateId};

#[derive(Clone, Debug)]
pub struct ModelParams {
    pub max_states: usize,
    pub agents: usize,
    pub actions: usize,
    pub atoms: Vec<String>,
    pub max_rank: u32,
}

impl Default for ModelParams {
    fn default() -> Self {
        Self {
            max_states: 4,
            agents: 2,
            actions: 2,
            atoms: vec!["p".into(), "q".into()],
            max_rank: 2,
        }
    }
}

pub fn agent_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn action_names(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// A random valid short-sighted model. Every agent gets a nonempty random
/// subset of the actions at each state; some rank blocks are omitted.
pub fn random_model<R: Rng + ?Sized>(rng: &mut R, params: &ModelParams) -> Cgsp {
    let n = rng.gen_range(1..=params.max_states);
    let mut b = CgsBuilder::new(agent_names(params.agents), action_names(params.actions))
        .expect("generated names are distinct");
    for s in 0..n {
        let props: Vec<String> = params
            .atoms
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .cloned()
            .collect();
        b.add_state(format!("s{s}"), props).expect("fresh state");
    }
    for s in 0..n {
        let choices: Vec<Vec<usize>> = (0..params.agents)
            .map(|_| {
                let mut acts: Vec<usize> =
                    (0..params.actions).filter(|_| rng.gen_bool(0.7)).collect();
                if acts.is_empty() {
                    acts.push(rng.gen_range(0..params.actions));
                }
                acts
            })
            .collect();
        for pos in Odometer::new(choices.iter().map(Vec::len).collect()) {
            let joint = JointAction(
                pos.iter()
                    .zip(&choices)
                    .map(|(&p, c)| ActionId(c[p]))
                    .collect(),
            );
            let to = StateId(rng.gen_range(0..n));
            b.add_transition(StateId(s), joint, to).expect("each joint action once");
        }
    }
    let cgs = b.build().expect("nonempty model");
    let mut blocks = Vec::new();
    for a in cgs.agent_ids() {
        for w in cgs.state_ids() {
            if rng.gen_bool(0.25) {
                continue;
            }
            let ranks: BTreeMap<StateId, u32> = cgs
                .successors(w)
                .iter()
                .map(|&v| (v, rng.gen_range(0..=params.max_rank)))
                .collect();
            blocks.push(RankBlock {
                agent: a,
                state: w,
                ranks,
            });
        }
    }
    Cgsp::new(cgs, blocks).expect("blocks are distinct")
}

#[derive(Clone, Debug)]
pub struct FormulaParams {
    pub agents: Vec<String>,
    pub atoms: Vec<String>,
    /// Maximum nesting of strategic operators.
    pub modal_depth: usize,
    /// Maximum nesting of Boolean connectives between strategic operators.
    pub bool_depth: usize,
    /// Include `G` and `U`.
    pub temporal: bool,
}

impl FormulaParams {
    pub fn next_only(agents: Vec<String>, modal_depth: usize) -> Self {
        Self {
            agents,
            atoms: vec!["p".into(), "q".into()],
            modal_depth,
            bool_depth: 2,
            temporal: false,
        }
    }

    pub fn full(agents: Vec<String>, modal_depth: usize) -> Self {
        Self {
            temporal: true,
            ..Self::next_only(agents, modal_depth)
        }
    }
}

/// Uniformly random subset of `agents`.
pub fn random_coalition<R: Rng + ?Sized>(rng: &mut R, agents: &[String]) -> Coalition {
    Coalition::new(agents.iter().filter(|_| rng.gen_bool(0.5)).cloned())
}

pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, params: &FormulaParams) -> Formula {
    gen_formula(rng, params, params.modal_depth, params.bool_depth)
}

fn gen_formula<R: Rng + ?Sized>(
    rng: &mut R,
    params: &FormulaParams,
    modal: usize,
    boolean: usize,
) -> Formula {
    let leaf = |rng: &mut R| -> Formula {
        match rng.gen_range(0..10) {
            0 => Formula::True,
            1 => Formula::False,
            _ => Formula::atom(params.atoms.choose(rng).expect("atoms nonempty").clone()),
        }
    };
    let can_bool = boolean > 0;
    let can_modal = modal > 0;
    // 0..4 boolean, 4..7 strategic, 7 leaf
    let kind = match (can_bool, can_modal) {
        (false, false) => return leaf(rng),
        (true, false) => [0, 1, 2, 3, 7][rng.gen_range(0..5)],
        (false, true) => [4, 5, 6, 7][rng.gen_range(0..4)],
        (true, true) => rng.gen_range(0..8),
    };
    let sub = |rng: &mut R| gen_formula(rng, params, modal, boolean - 1);
    let inner = |rng: &mut R| gen_formula(rng, params, modal - 1, params.bool_depth);
    match kind {
        0 => sub(rng).not(),
        1 => sub(rng).and(sub(rng)),
        2 => sub(rng).or(sub(rng)),
        3 => {
            if rng.gen_bool(0.7) {
                sub(rng).implies(sub(rng))
            } else {
                sub(rng).iff(sub(rng))
            }
        }
        4..=6 => {
            let m = Modality {
                coalition: random_coalition(rng, &params.agents),
                rational: rng.gen_bool(0.5),
            };
            if !params.temporal {
                return Formula::next(m, inner(rng));
            }
            match kind {
                4 => Formula::next(m, inner(rng)),
                5 => Formula::always(m, inner(rng)),
                _ => Formula::until(m, inner(rng), inner(rng)),
            }
        }
        _ => leaf(rng),
    }
}

/// A chain of `n` states for scaling runs. From `c_i` agent 1 playing `a`
/// advances when agent 2 plays `a` and stays otherwise; agent 1 playing `b`
/// advances or falls back to `c_0`. The last state carries `goal`, every
/// tenth state lacks `p`.
pub fn chain_model(n: usize) -> Cgsp {
    assert!(n > 0, "chain needs a state");
    let mut b = CgsBuilder::new(["1", "2"], ["a", "b"]).expect("distinct names");
    for i in 0..n {
        let mut props = Vec::new();
        if i % 10 != 9 {
            props.push("p");
        }
        if i + 1 == n {
            props.push("goal");
        }
        b.add_state(format!("c{i}"), props).expect("fresh state");
    }
    let (a, bb) = (ActionId(0), ActionId(1));
    for i in 0..n {
        let here = StateId(i);
        let next = StateId((i + 1).min(n - 1));
        let t = [
            ([a, a], next),
            ([a, bb], here),
            ([bb, a], next),
            ([bb, bb], StateId(0)),
        ];
        for (joint, to) in t {
            b.add_transition(here, JointAction(joint.to_vec()), to)
                .expect("each joint action once");
        }
    }
    let cgs = b.build().expect("nonempty");
    let blocks = cgs
        .state_ids()
        .map(|w| {
            let mut ranks = BTreeMap::new();
            for &v in cgs.successors(w) {
                let r = if v.0 > w.0 { 2 } else if v == w { 1 } else { 0 };
                ranks.insert(v, r);
            }
            RankBlock {
                agent: AgentId(0),
                state: w,
                ranks,
            }
        })
        .collect::<Vec<_>>();
    Cgsp::new(cgs, blocks).expect("one block per state")
}

/// Fixed depth-2 formula used on chain models.
pub fn chain_formula() -> Formula {
    let one = Coalition::new(["1"]);
    let both = Coalition::new(["1", "2"]);
    let goal_next = Formula::next(Modality::rational(both), Formula::atom("goal"));
    Formula::until(
        Modality::rational(one.clone()),
        Formula::atom("p"),
        goal_next.or(Formula::always(Modality::plain(one), Formula::atom("goal"))),
    )
}

#[cfg(test)]
mod tests {
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    use super::*;
    use crate::model::validate;

    #[test]
    fn random_models_are_valid() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let m = random_model(&mut rng, &ModelParams::default());
            let report = validate(&m);
            assert!(report.is_ok(), "{report}");
        }
    }

    #[test]
    fn random_formulas_respect_depth() {
        let mut rng = StdRng::seed_from_u64(11);
        let params = FormulaParams::full(agent_names(2), 3);
        for _ in 0..200 {
            let f = random_formula(&mut rng, &params);
            assert!(f.modal_degree() <= 3);
        }
        let params = FormulaParams::next_only(agent_names(2), 2);
        for _ in 0..200 {
            assert!(random_formula(&mut rng, &params).is_next_fragment());
        }
    }

    #[test]
    fn chain_is_valid() {
        let m = chain_model(50);
        assert!(validate(&m).is_ok());
        assert_eq!(chain_formula().modal_degree(), 2);
    }
}
