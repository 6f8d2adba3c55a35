//! JSON model file format.
//!
//! ```json
//! { "agents": ["v1","v2"], "actions": ["Move","Skip"],
//!   "states": [{"name":"q0","props":[]}, {"name":"q4","props":["crash"]}],
//!   "transitions": [{"from":"q0","action":{"v1":"Move","v2":"Move"},"to":"q4"}],
//!   "preferences": [{"agent":"v1","state":"q0","ranks":{"q4":0}}] }
//! ```
//!
//! Unknown keys and repeated `(from, action)` pairs are rejected.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Cgsp, CgsBuilder, JointAction, ModelError, RankBlock};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub agents: Vec<String>,
    pub actions: Vec<String>,
    pub states: Vec<StateEntry>,
    pub transitions: Vec<TransitionEntry>,
    #[serde(default)]
    pub preferences: Vec<PreferenceEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateEntry {
    pub name: String,
    #[serde(default)]
    pub props: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionEntry {
    pub from: String,
    pub action: BTreeMap<String, String>,
    pub to: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PreferenceEntry {
    pub agent: String,
    pub state: String,
    pub ranks: BTreeMap<String, u32>,
}

impl ModelFile {
    pub fn into_model(self) -> Result<Cgsp, ModelError> {
        let mut b = CgsBuilder::new(self.agents.clone(), self.actions)?;
        for s in self.states {
            b.add_state(s.name, s.props)?;
        }
        for t in self.transitions {
            let from = b.state_id(&t.from)?;
            let to = b.state_id(&t.to)?;
            for agent in t.action.keys() {
                b.agent_id(agent)?;
            }
            let mut joint = Vec::with_capacity(self.agents.len());
            for agent in &self.agents {
                let act = t.action.get(agent).ok_or_else(|| ModelError::IncompleteJointAction {
                    state: t.from.clone(),
                    agent: agent.clone(),
                })?;
                joint.push(b.action_id(act)?);
            }
            b.add_transition(from, JointAction(joint), to)?;
        }
        let cgs = b.build()?;
        let mut blocks = Vec::with_capacity(self.preferences.len());
        for p in self.preferences {
            let ranks = p
                .ranks
                .iter()
                .map(|(s, r)| cgs.state_id(s).map(|id| (id, *r)))
                .collect::<Result<_, _>>()?;
            blocks.push(RankBlock {
                agent: cgs.agent_id(&p.agent)?,
                state: cgs.state_id(&p.state)?,
                ranks,
            });
        }
        Cgsp::new(cgs, blocks)
    }

    pub fn from_model(model: &Cgsp) -> Self {
        let states = model
            .state_ids()
            .map(|s| StateEntry {
                name: model.state_name(s).to_string(),
                props: model.props(s).iter().cloned().collect(),
            })
            .collect();
        let mut transitions = Vec::with_capacity(model.num_transitions());
        for w in model.state_ids() {
            for (joint, &v) in model.moves(w) {
                let action = model
                    .agent_ids()
                    .map(|a| {
                        (
                            model.agent_name(a).to_string(),
                            model.action_name(joint.get(a)).to_string(),
                        )
                    })
                    .collect();
                transitions.push(TransitionEntry {
                    from: model.state_name(w).to_string(),
                    action,
                    to: model.state_name(v).to_string(),
                });
            }
        }
        let preferences = model
            .rank_blocks()
            .map(|b| PreferenceEntry {
                agent: model.agent_name(b.agent).to_string(),
                state: model.state_name(b.state).to_string(),
                ranks: b
                    .ranks
                    .iter()
                    .map(|(s, r)| (model.state_name(*s).to_string(), *r))
                    .collect(),
            })
            .collect();
        ModelFile {
            agents: model.agents().to_vec(),
            actions: model.actions().to_vec(),
            states,
            transitions,
            preferences,
        }
    }
}

pub fn from_json(text: &str) -> Result<Cgsp, ModelError> {
    let file: ModelFile =
        serde_json::from_str(text).map_err(|e| ModelError::Format(e.to_string()))?;
    file.into_model()
}

pub fn to_json(model: &Cgsp) -> String {
    serde_json::to_string_pretty(&ModelFile::from_model(model)).expect("model serializes")
}

pub fn to_value(model: &Cgsp) -> serde_json::Value {
    serde_json::to_value(ModelFile::from_model(model)).expect("model serializes")
}
