//! Countermodel recipes for standard disjunctions and their realization.
//!
//! Actions at the root are indices into the capabilities of the padded
//! disjunction: positives first (`0..n`), then plain negatives, then
//! rational negatives. Playing the index of a negative capability is a vote
//! for it; a negative is *supported* by a joint action when every member of
//! its coalition votes for it. The positive capability *impeached* by a joint
//! action is the sum of the played indices modulo `n`. The successor reached
//! by each root joint action must satisfy the formula `clist[σ]`, and an
//! agent's action is rational exactly when it votes for a rational negative.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::rc::Rc;

use super::{pad, ValidityError};
use crate::logic::{Capability, Coalition, Formula, StandardDisjunction};
use crate::model::{ActionId, AgentId, CgsBuilder, Cgsp, JointAction, Odometer, RankBlock, StateId};

#[derive(Clone, Debug)]
pub struct Blueprint {
    /// Positive capabilities (plain ones first) with their rational flag.
    pub positives: Vec<(Capability, bool)>,
    /// Negative capabilities (plain ones first) with their rational flag.
    pub negatives: Vec<(Capability, bool)>,
    /// Number of root actions.
    pub actions: usize,
    /// Root actions that are rational, identical for every agent.
    pub rlist: Vec<usize>,
    /// Required successor formula per root joint action (agent order).
    pub clist: Vec<(Vec<usize>, Formula)>,
}

/// Negative indices (offset into `Blueprint::negatives`) supported by
/// `sigma`.
pub fn support(bp: &Blueprint, agents: &[String], sigma: &[usize]) -> Vec<usize> {
    let n = bp.positives.len();
    (0..bp.negatives.len())
        .filter(|&x| {
            bp.negatives[x]
                .0
                .coalition
                .members()
                .all(|a| sigma[agent_pos(agents, a)] == n + x)
        })
        .collect()
}

fn agent_pos(agents: &[String], a: &str) -> usize {
    agents.iter().position(|b| b == a).expect("coalition within agents")
}

impl Blueprint {
    pub fn new(d: &StandardDisjunction, agents: &[String]) -> Self {
        let d = pad(d, agents);
        let positives: Vec<(Capability, bool)> = d
            .pi
            .iter()
            .map(|c| (c.clone(), false))
            .chain(d.pirat.iter().map(|c| (c.clone(), true)))
            .collect();
        let negatives: Vec<(Capability, bool)> = d
            .ni
            .iter()
            .map(|c| (c.clone(), false))
            .chain(d.nirat.iter().map(|c| (c.clone(), true)))
            .collect();
        let n = positives.len();
        let actions = n + negatives.len();
        let rlist: Vec<usize> = (n + d.ni.len()..actions).collect();
        let y0: Vec<Formula> = d.y0(agents).into_iter().map(|j| d.pi[j].body.clone()).collect();
        let y1: Vec<Formula> = d
            .y1(agents)
            .into_iter()
            .map(|j| d.pirat[j].body.clone())
            .collect();

        let mut bp = Blueprint {
            positives,
            negatives,
            actions,
            rlist,
            clist: Vec::new(),
        };
        for sigma in Odometer::new(vec![actions; agents.len()]) {
            let sup = support(&bp, agents, &sigma);
            let rational = |a: usize| bp.rlist.contains(&sigma[a]);
            let mut theta: Vec<Formula> = sup.iter().map(|&x| bp.negatives[x].0.body.clone()).collect();
            theta.extend(y0.iter().map(|f| f.clone().not()));
            let covered = sup.iter().fold(Coalition::empty(), |acc, &x| {
                acc.union(&bp.negatives[x].0.coalition)
            });
            let imp = sigma.iter().sum::<usize>() % n;
            let (imp_cap, imp_rational) = &bp.positives[imp];
            let imp_members: Vec<usize> =
                imp_cap.coalition.members().map(|a| agent_pos(agents, a)).collect();
            if (0..agents.len()).all(rational) {
                theta.extend(y1.iter().map(|f| f.clone().not()));
            } else if covered.is_subset(&imp_cap.coalition)
                && (!imp_rational || imp_members.iter().all(|&a| rational(a)))
            {
                theta.push(imp_cap.body.clone().not());
            }
            bp.clist.push((sigma, Formula::conj(theta)));
        }
        bp
    }
}

/// Index-based model under construction.
#[derive(Clone, Debug)]
pub(crate) struct Raw {
    props: Vec<BTreeSet<String>>,
    moves: Vec<Vec<(Vec<usize>, usize)>>,
    // per state: (agent position, ranks over successors)
    ranks: Vec<Vec<(usize, BTreeMap<usize, u32>)>>,
    pub(crate) root: usize,
}

impl Raw {
    /// One state with a self loop.
    pub(crate) fn single(true_atoms: BTreeSet<String>, agents: usize) -> Self {
        Raw {
            props: vec![true_atoms],
            moves: vec![vec![(vec![0; agents], 0)]],
            ranks: vec![Vec::new()],
            root: 0,
        }
    }

    fn push_state(&mut self, src: &Raw, s: usize, offset: usize) -> usize {
        let id = self.props.len();
        self.props.push(src.props[s].clone());
        self.moves.push(
            src.moves[s]
                .iter()
                .map(|(j, t)| (j.clone(), t + offset))
                .collect(),
        );
        self.ranks.push(
            src.ranks[s]
                .iter()
                .map(|(a, r)| (*a, r.iter().map(|(t, v)| (t + offset, *v)).collect()))
                .collect(),
        );
        id
    }

    /// Fresh root whose joint action `σ` leads to a private copy of the root
    /// of the model given for `σ`. Models given for equal formulas share
    /// their non-root states.
    pub(crate) fn realize(
        root_true: BTreeSet<String>,
        bp: &Blueprint,
        subs: Vec<(Vec<usize>, Formula, Rc<Raw>)>,
    ) -> Self {
        let agents = subs.first().map_or(0, |(s, _, _)| s.len());
        let mut out = Raw {
            props: vec![root_true],
            moves: vec![Vec::new()],
            ranks: vec![Vec::new()],
            root: 0,
        };
        let mut placed: HashMap<Formula, usize> = HashMap::new();
        let mut root_ranks: Vec<BTreeMap<usize, u32>> = vec![BTreeMap::new(); agents];
        for (sigma, goal, sub) in subs {
            let offset = match placed.get(&goal) {
                Some(&o) => o,
                None => {
                    let o = out.props.len();
                    for s in 0..sub.props.len() {
                        out.push_state(&sub, s, o);
                    }
                    placed.insert(goal, o);
                    o
                }
            };
            let copy = out.push_state(&sub, sub.root, offset);
            for (a, ranks) in root_ranks.iter_mut().enumerate() {
                ranks.insert(copy, u32::from(bp.rlist.contains(&sigma[a])));
            }
            out.moves[0].push((sigma, copy));
        }
        out.ranks[0] = root_ranks.into_iter().enumerate().collect();
        out
    }

    pub(crate) fn to_model(&self, agents: &[String]) -> Result<Cgsp, ValidityError> {
        let width = self
            .moves
            .iter()
            .flatten()
            .flat_map(|(j, _)| j.iter().copied())
            .max()
            .map_or(1, |m| m + 1);
        let actions: Vec<String> = (0..width).map(|i| format!("a{i}")).collect();
        let mut b = CgsBuilder::new(agents.iter().cloned(), actions)?;
        for (s, props) in self.props.iter().enumerate() {
            b.add_state(format!("w{s}"), props.iter().cloned())?;
        }
        for (s, moves) in self.moves.iter().enumerate() {
            for (j, t) in moves {
                b.add_transition(
                    StateId(s),
                    JointAction(j.iter().map(|&a| ActionId(a)).collect()),
                    StateId(*t),
                )?;
            }
        }
        let cgs = b.build()?;
        let blocks = self.ranks.iter().enumerate().flat_map(|(s, per_agent)| {
            per_agent.iter().map(move |(a, ranks)| RankBlock {
                agent: AgentId(*a),
                state: StateId(s),
                ranks: ranks.iter().map(|(t, v)| (StateId(*t), *v)).collect(),
            })
        });
        Ok(Cgsp::new(cgs, blocks)?)
    }
}
