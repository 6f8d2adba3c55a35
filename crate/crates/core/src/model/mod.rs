//! Concurrent game structures with short-sighted preferences.
//!
//! A [`Cgs`] stores transitions as a mapping from `(state, joint action)`
//! to a single target, so collective choice determinism holds by
//! construction. Independence of choices and seriality are checked by
//! [`validate`], together with completeness of the preference ranks.
//!
//! Preferences are per-agent, per-state rank functions over the one-step
//! successors of that state (higher is better). A state with no rank block
//! is one where the agent is indifferent between all successors.

mod dominance;
pub mod json;
pub(crate) mod pre;
mod transform;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::Deref;

use thiserror::Error;

pub use dominance::{dominated_actions, non_dominated_joint_actions, Rationality};
pub use pre::{pre, pre_rat};
pub use transform::adjoint_transform;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AgentId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActionId(pub usize);

/// One action per agent, indexed by agent position.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JointAction(pub Vec<ActionId>);

impl JointAction {
    pub fn get(&self, agent: AgentId) -> ActionId {
        self.0[agent.0]
    }
}

/// A joint action restricted to a coalition, sorted by agent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoalitionAction(pub Vec<(AgentId, ActionId)>);

impl CoalitionAction {
    pub fn empty() -> Self {
        CoalitionAction(Vec::new())
    }

    pub fn get(&self, agent: AgentId) -> Option<ActionId> {
        self.0.iter().find(|(a, _)| *a == agent).map(|(_, act)| *act)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("model has no agents")]
    NoAgents,
    #[error("model has no states")]
    NoStates,
    #[error("duplicate agent `{0}`")]
    DuplicateAgent(String),
    #[error("duplicate action `{0}`")]
    DuplicateAction(String),
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown agent `{0}`")]
    UnknownAgent(String),
    #[error("unknown action `{0}`")]
    UnknownAction(String),
    #[error("state id {0} out of range")]
    StateOutOfRange(usize),
    #[error("agent id {0} out of range")]
    AgentOutOfRange(usize),
    #[error("joint action for transition from `{state}` does not assign agent `{agent}`")]
    IncompleteJointAction { state: String, agent: String },
    #[error("joint action has {got} components, model has {expected} agents")]
    JointActionArity { expected: usize, got: usize },
    #[error("conflicting targets for joint action {action} at `{state}`")]
    ConflictingTransition { state: String, action: String },
    #[error("duplicate transition for joint action {action} at `{state}`")]
    DuplicateTransition { state: String, action: String },
    #[error("joint action {action} unavailable at `{state}`")]
    UnavailableJointAction { state: String, action: String },
    #[error("duplicate preference block for agent `{agent}` at `{state}`")]
    DuplicatePreference { agent: String, state: String },
    #[error("malformed model file: {0}")]
    Format(String),
}

/// A finite concurrent game structure.
#[derive(Clone, Debug)]
pub struct Cgs {
    agents: Vec<String>,
    actions: Vec<String>,
    states: Vec<String>,
    props: Vec<BTreeSet<String>>,
    moves: Vec<BTreeMap<JointAction, StateId>>,
    choices: Vec<Vec<Vec<ActionId>>>,
    strides: Vec<Vec<usize>>,
    table: Vec<Vec<Option<StateId>>>,
    successors: Vec<Vec<StateId>>,
    predecessors: Vec<Vec<StateId>>,
    state_index: HashMap<String, StateId>,
    agent_index: HashMap<String, AgentId>,
    action_index: HashMap<String, ActionId>,
}

impl Cgs {
    pub fn agents(&self) -> &[String] {
        &self.agents
    }

    pub fn actions(&self) -> &[String] {
        &self.actions
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_agents(&self) -> usize {
        self.agents.len()
    }

    pub fn state_ids(&self) -> impl Iterator<Item = StateId> {
        (0..self.states.len()).map(StateId)
    }

    pub fn agent_ids(&self) -> impl Iterator<Item = AgentId> {
        (0..self.agents.len()).map(AgentId)
    }

    pub fn state_name(&self, s: StateId) -> &str {
        &self.states[s.0]
    }

    pub fn agent_name(&self, a: AgentId) -> &str {
        &self.agents[a.0]
    }

    pub fn action_name(&self, a: ActionId) -> &str {
        &self.actions[a.0]
    }

    pub fn state_id(&self, name: &str) -> Result<StateId, ModelError> {
        self.state_index
            .get(name)
            .copied()
            .ok_or_else(|| ModelError::UnknownState(name.to_string()))
    }

    pub fn agent_id(&self, name: &str) -> Result<AgentId, ModelError> {
        self.agent_index
            .get(name)
            .copied()
            .ok_or_else(|| ModelError::UnknownAgent(name.to_string()))
    }

    pub fn action_id(&self, name: &str) -> Result<ActionId, ModelError> {
        self.action_index
            .get(name)
            .copied()
            .ok_or_else(|| ModelError::UnknownAction(name.to_string()))
    }

    pub fn props(&self, s: StateId) -> &BTreeSet<String> {
        &self.props[s.0]
    }

    pub fn has_prop(&self, s: StateId, p: &str) -> bool {
        self.props[s.0].contains(p)
    }

    /// Defined transitions at `s`, ordered by joint action.
    pub fn moves(&self, s: StateId) -> &BTreeMap<JointAction, StateId> {
        &self.moves[s.0]
    }

    pub fn successors(&self, s: StateId) -> &[StateId] {
        &self.successors[s.0]
    }

    pub fn predecessors(&self, s: StateId) -> &[StateId] {
        &self.predecessors[s.0]
    }

    pub fn num_transitions(&self) -> usize {
        self.moves.iter().map(BTreeMap::len).sum()
    }

    fn check_state(&self, s: StateId) -> Result<(), ModelError> {
        if s.0 < self.states.len() {
            Ok(())
        } else {
            Err(ModelError::StateOutOfRange(s.0))
        }
    }

    fn check_agent(&self, a: AgentId) -> Result<(), ModelError> {
        if a.0 < self.agents.len() {
            Ok(())
        } else {
            Err(ModelError::AgentOutOfRange(a.0))
        }
    }

    /// Actions `agent` can choose at `s`: those appearing in some defined
    /// joint action at `s`. Sorted by action id.
    pub fn choice_set(&self, agent: AgentId, s: StateId) -> Result<&[ActionId], ModelError> {
        self.check_state(s)?;
        self.check_agent(agent)?;
        Ok(&self.choices[s.0][agent.0])
    }

    pub(crate) fn choices_at(&self, s: StateId) -> &[Vec<ActionId>] {
        &self.choices[s.0]
    }

    /// The unique target of `action` at `s`.
    pub fn successor(&self, s: StateId, action: &JointAction) -> Result<StateId, ModelError> {
        self.check_state(s)?;
        if action.0.len() != self.agents.len() {
            return Err(ModelError::JointActionArity {
                expected: self.agents.len(),
                got: action.0.len(),
            });
        }
        self.moves[s.0]
            .get(action)
            .copied()
            .ok_or_else(|| ModelError::UnavailableJointAction {
                state: self.states[s.0].clone(),
                action: self.render_joint(action),
            })
    }

    /// Target of the joint action given as positions into each agent's
    /// choice set at `s`.
    pub(crate) fn move_at(&self, s: StateId, positions: &[usize]) -> Option<StateId> {
        let strides = &self.strides[s.0];
        let idx: usize = positions.iter().zip(strides).map(|(p, st)| p * st).sum();
        self.table[s.0].get(idx).copied().flatten()
    }

    pub fn render_joint(&self, action: &JointAction) -> String {
        let parts: Vec<&str> = action
            .0
            .iter()
            .map(|a| self.actions.get(a.0).map(String::as_str).unwrap_or("?"))
            .collect();
        format!("({})", parts.join(","))
    }
}

/// Incremental construction of a [`Cgs`].
#[derive(Debug)]
pub struct CgsBuilder {
    agents: Vec<String>,
    actions: Vec<String>,
    states: Vec<String>,
    props: Vec<BTreeSet<String>>,
    moves: Vec<BTreeMap<JointAction, StateId>>,
    state_index: HashMap<String, StateId>,
    agent_index: HashMap<String, AgentId>,
    action_index: HashMap<String, ActionId>,
}

impl CgsBuilder {
    pub fn new<A, B>(
        agents: impl IntoIterator<Item = A>,
        actions: impl IntoIterator<Item = B>,
    ) -> Result<Self, ModelError>
    where
        A: Into<String>,
        B: Into<String>,
    {
        let agents: Vec<String> = agents.into_iter().map(Into::into).collect();
        let actions: Vec<String> = actions.into_iter().map(Into::into).collect();
        if agents.is_empty() {
            return Err(ModelError::NoAgents);
        }
        let mut agent_index = HashMap::new();
        for (i, a) in agents.iter().enumerate() {
            if agent_index.insert(a.clone(), AgentId(i)).is_some() {
                return Err(ModelError::DuplicateAgent(a.clone()));
            }
        }
        let mut action_index = HashMap::new();
        for (i, a) in actions.iter().enumerate() {
            if action_index.insert(a.clone(), ActionId(i)).is_some() {
                return Err(ModelError::DuplicateAction(a.clone()));
            }
        }
        Ok(Self {
            agents,
            actions,
            states: Vec::new(),
            props: Vec::new(),
            moves: Vec::new(),
            state_index: HashMap::new(),
            agent_index,
            action_index,
        })
    }

    pub fn add_state<P: Into<String>>(
        &mut self,
        name: impl Into<String>,
        props: impl IntoIterator<Item = P>,
    ) -> Result<StateId, ModelError> {
        let name = name.into();
        let id = StateId(self.states.len());
        if self.state_index.contains_key(&name) {
            return Err(ModelError::DuplicateState(name));
        }
        self.state_index.insert(name.clone(), id);
        self.states.push(name);
        self.props.push(props.into_iter().map(Into::into).collect());
        self.moves.push(BTreeMap::new());
        Ok(id)
    }

    pub fn state_id(&self, name: &str) -> Result<StateId, ModelError> {
        self.state_index
            .get(name)
            .copied()
            .ok_or_else(|| ModelError::UnknownState(name.to_string()))
    }

    pub fn action_id(&self, name: &str) -> Result<ActionId, ModelError> {
        self.action_index
            .get(name)
            .copied()
            .ok_or_else(|| ModelError::UnknownAction(name.to_string()))
    }

    pub fn agent_id(&self, name: &str) -> Result<AgentId, ModelError> {
        self.agent_index
            .get(name)
            .copied()
            .ok_or_else(|| ModelError::UnknownAgent(name.to_string()))
    }

    pub fn add_transition(
        &mut self,
        from: StateId,
        action: JointAction,
        to: StateId,
    ) -> Result<(), ModelError> {
        for s in [from, to] {
            if s.0 >= self.states.len() {
                return Err(ModelError::StateOutOfRange(s.0));
            }
        }
        if action.0.len() != self.agents.len() {
            return Err(ModelError::JointActionArity {
                expected: self.agents.len(),
                got: action.0.len(),
            });
        }
        if let Some(a) = action.0.iter().find(|a| a.0 >= self.actions.len()) {
            return Err(ModelError::UnknownAction(format!("#{}", a.0)));
        }
        if let Some(&prev) = self.moves[from.0].get(&action) {
            let state = self.states[from.0].clone();
            let action = self.render(&action);
            return Err(if prev == to {
                ModelError::DuplicateTransition { state, action }
            } else {
                ModelError::ConflictingTransition { state, action }
            });
        }
        self.moves[from.0].insert(action, to);
        Ok(())
    }

    /// Adds a transition with the joint action given as one action name per
    /// agent, in agent order.
    pub fn add_transition_named(
        &mut self,
        from: &str,
        action: &[&str],
        to: &str,
    ) -> Result<(), ModelError> {
        let from = self.state_id(from)?;
        let to = self.state_id(to)?;
        let joint = action
            .iter()
            .map(|a| self.action_id(a))
            .collect::<Result<Vec<_>, _>>()?;
        self.add_transition(from, JointAction(joint), to)
    }

    fn render(&self, action: &JointAction) -> String {
        let parts: Vec<&str> = action.0.iter().map(|a| self.actions[a.0].as_str()).collect();
        format!("({})", parts.join(","))
    }

    pub fn build(self) -> Result<Cgs, ModelError> {
        if self.states.is_empty() {
            return Err(ModelError::NoStates);
        }
        let n = self.states.len();
        let k = self.agents.len();
        let mut choices = Vec::with_capacity(n);
        let mut strides = Vec::with_capacity(n);
        let mut table = Vec::with_capacity(n);
        let mut successors = Vec::with_capacity(n);
        let mut predecessors: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for (s, moves) in self.moves.iter().enumerate() {
            let mut sets: Vec<BTreeSet<ActionId>> = vec![BTreeSet::new(); k];
            for joint in moves.keys() {
                for (agent, act) in joint.0.iter().enumerate() {
                    sets[agent].insert(*act);
                }
            }
            let sets: Vec<Vec<ActionId>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
            let mut stride = vec![0; k];
            let mut size = 1usize;
            for agent in (0..k).rev() {
                stride[agent] = size;
                size *= sets[agent].len();
            }
            let mut dense = vec![None; if moves.is_empty() { 0 } else { size }];
            for (joint, &to) in moves {
                let idx: usize = joint
                    .0
                    .iter()
                    .enumerate()
                    .map(|(agent, act)| {
                        sets[agent].binary_search(act).expect("action in choice set") * stride[agent]
                    })
                    .sum();
                dense[idx] = Some(to);
            }
            let succ: BTreeSet<StateId> = moves.values().copied().collect();
            for &t in &succ {
                predecessors[t.0].push(StateId(s));
            }
            choices.push(sets);
            strides.push(stride);
            table.push(dense);
            successors.push(succ.into_iter().collect());
        }
        Ok(Cgs {
            agents: self.agents,
            actions: self.actions,
            states: self.states,
            props: self.props,
            moves: self.moves,
            choices,
            strides,
            table,
            successors,
            predecessors,
            state_index: self.state_index,
            agent_index: self.agent_index,
            action_index: self.action_index,
        })
    }
}

/// Ranks of one agent over the successors of one state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankBlock {
    pub agent: AgentId,
    pub state: StateId,
    pub ranks: BTreeMap<StateId, u32>,
}

/// A CGS together with short-sighted preferences.
#[derive(Clone, Debug)]
pub struct Cgsp {
    cgs: Cgs,
    // [agent][state]; `None` means indifference over all successors
    ranks: Vec<Vec<Option<BTreeMap<StateId, u32>>>>,
}

impl Deref for Cgsp {
    type Target = Cgs;

    fn deref(&self) -> &Cgs {
        &self.cgs
    }
}

impl Cgsp {
    /// Every agent indifferent everywhere.
    pub fn indifferent(cgs: Cgs) -> Self {
        let ranks = vec![vec![None; cgs.num_states()]; cgs.num_agents()];
        Self { cgs, ranks }
    }

    pub fn new(cgs: Cgs, blocks: impl IntoIterator<Item = RankBlock>) -> Result<Self, ModelError> {
        let mut model = Self::indifferent(cgs);
        for block in blocks {
            model.cgs.check_agent(block.agent)?;
            model.cgs.check_state(block.state)?;
            for v in block.ranks.keys() {
                model.cgs.check_state(*v)?;
            }
            let slot = &mut model.ranks[block.agent.0][block.state.0];
            if slot.is_some() {
                return Err(ModelError::DuplicatePreference {
                    agent: model.cgs.agent_name(block.agent).to_string(),
                    state: model.cgs.state_name(block.state).to_string(),
                });
            }
            *slot = Some(block.ranks);
        }
        Ok(model)
    }

    pub fn cgs(&self) -> &Cgs {
        &self.cgs
    }

    /// Rank of successor `v` for `agent` at `w`; 0 where unranked.
    pub fn rank(&self, agent: AgentId, w: StateId, v: StateId) -> u32 {
        self.ranks[agent.0][w.0]
            .as_ref()
            .and_then(|r| r.get(&v).copied())
            .unwrap_or(0)
    }

    pub fn rank_block(&self, agent: AgentId, w: StateId) -> Option<&BTreeMap<StateId, u32>> {
        self.ranks[agent.0][w.0].as_ref()
    }

    /// All explicitly given rank blocks, ordered by agent then state.
    pub fn rank_blocks(&self) -> impl Iterator<Item = RankBlock> + '_ {
        self.ranks.iter().enumerate().flat_map(|(a, per_state)| {
            per_state.iter().enumerate().filter_map(move |(s, r)| {
                r.as_ref().map(|ranks| RankBlock {
                    agent: AgentId(a),
                    state: StateId(s),
                    ranks: ranks.clone(),
                })
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A combination of individually available actions has no transition.
    Independence { state: String, action: String },
    /// A state without outgoing transitions.
    Seriality { state: String },
    /// A rank block that misses a successor.
    UnrankedSuccessor {
        agent: String,
        state: String,
        successor: String,
    },
    /// A rank block that ranks a non-successor.
    RankedNonSuccessor {
        agent: String,
        state: String,
        target: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Independence { state, action } => {
                write!(f, "C2 violation at {state}: joint action {action} undefined")
            }
            Violation::Seriality { state } => {
                write!(f, "C3 violation at {state}: no outgoing transition")
            }
            Violation::UnrankedSuccessor {
                agent,
                state,
                successor,
            } => write!(
                f,
                "preference violation at {state}: agent {agent} does not rank successor {successor}"
            ),
            Violation::RankedNonSuccessor {
                agent,
                state,
                target,
            } => write!(
                f,
                "preference violation at {state}: agent {agent} ranks non-successor {target}"
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks independence of choices, seriality and rank completeness.
pub fn validate(model: &Cgsp) -> ValidationReport {
    let mut violations = Vec::new();
    for w in model.state_ids() {
        let name = model.state_name(w);
        let moves = model.moves(w);
        if moves.is_empty() {
            violations.push(Violation::Seriality {
                state: name.to_string(),
            });
            continue;
        }
        for joint in product(model.choices_at(w)) {
            let joint = JointAction(joint);
            if !moves.contains_key(&joint) {
                violations.push(Violation::Independence {
                    state: name.to_string(),
                    action: model.render_joint(&joint),
                });
            }
        }
    }
    for agent in model.agent_ids() {
        for w in model.state_ids() {
            let Some(block) = model.rank_block(agent, w) else {
                continue;
            };
            for v in model.successors(w) {
                if !block.contains_key(v) {
                    violations.push(Violation::UnrankedSuccessor {
                        agent: model.agent_name(agent).to_string(),
                        state: model.state_name(w).to_string(),
                        successor: model.state_name(*v).to_string(),
                    });
                }
            }
            for v in block.keys() {
                if model.successors(w).binary_search(v).is_err() {
                    violations.push(Violation::RankedNonSuccessor {
                        agent: model.agent_name(agent).to_string(),
                        state: model.state_name(w).to_string(),
                        target: model.state_name(*v).to_string(),
                    });
                }
            }
        }
    }
    ValidationReport { violations }
}

pub fn choice_set(model: &Cgsp, agent: AgentId, w: StateId) -> Result<Vec<ActionId>, ModelError> {
    model.choice_set(agent, w).map(<[ActionId]>::to_vec)
}

pub fn successor(model: &Cgsp, w: StateId, action: &JointAction) -> Result<StateId, ModelError> {
    model.successor(w, action)
}

/// Cartesian product of the given sets, in lexicographic order. The product
/// of zero sets is one empty tuple.
pub(crate) fn product<T: Copy>(sets: &[Vec<T>]) -> impl Iterator<Item = Vec<T>> + '_ {
    Odometer::new(sets.iter().map(Vec::len).collect())
        .map(move |pos| pos.iter().zip(sets).map(|(&p, s)| s[p]).collect())
}

/// Iterates over all position vectors below the given radices.
pub(crate) struct Odometer {
    radices: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl Odometer {
    pub(crate) fn new(radices: Vec<usize>) -> Self {
        let current = if radices.iter().any(|&r| r == 0) {
            None
        } else {
            Some(vec![0; radices.len()])
        };
        Self { radices, current }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < self.radices[i] {
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The two-vehicle crossing model with ranks at q0, q1 and q2.
    pub(crate) fn m_cross() -> Cgsp {
        let mut b = CgsBuilder::new(["v1", "v2"], ["Move", "Skip"]).unwrap();
        b.add_state("q0", Vec::<String>::new()).unwrap();
        b.add_state("q1", ["c1"]).unwrap();
        b.add_state("q2", ["c2"]).unwrap();
        b.add_state("q3", ["c1", "c2"]).unwrap();
        b.add_state("q4", ["crash"]).unwrap();
        let t = [
            ("q0", ["Move", "Move"], "q4"),
            ("q0", ["Move", "Skip"], "q1"),
            ("q0", ["Skip", "Move"], "q2"),
            ("q0", ["Skip", "Skip"], "q0"),
            ("q1", ["Move", "Move"], "q3"),
            ("q1", ["Skip", "Move"], "q3"),
            ("q1", ["Move", "Skip"], "q1"),
            ("q1", ["Skip", "Skip"], "q1"),
            ("q2", ["Move", "Move"], "q3"),
            ("q2", ["Move", "Skip"], "q3"),
            ("q2", ["Skip", "Move"], "q2"),
            ("q2", ["Skip", "Skip"], "q2"),
        ];
        for (from, act, to) in t {
            b.add_transition_named(from, &act, to).unwrap();
        }
        for s in ["q3", "q4"] {
            for a in ["Move", "Skip"] {
                for c in ["Move", "Skip"] {
                    b.add_transition_named(s, &[a, c], s).unwrap();
                }
            }
        }
        let cgs = b.build().unwrap();
        let id = |n: &str| cgs.state_id(n).unwrap();
        let block = |agent: usize, state: &str, ranks: &[(&str, u32)]| RankBlock {
            agent: AgentId(agent),
            state: id(state),
            ranks: ranks.iter().map(|(s, r)| (id(s), *r)).collect(),
        };
        let blocks = vec![
            block(0, "q0", &[("q1", 2), ("q0", 1), ("q2", 1), ("q4", 0)]),
            block(1, "q0", &[("q2", 2), ("q0", 1), ("q1", 1), ("q4", 0)]),
            block(0, "q2", &[("q3", 2), ("q2", 1)]),
            block(1, "q1", &[("q3", 2), ("q1", 1)]),
        ];
        Cgsp::new(cgs, blocks).unwrap()
    }
}
