use super::{product, ActionId, AgentId, Cgsp, CoalitionAction, ModelError, Odometer, StateId};

/// Positions (into the choice set) of the actions of `agent` at `w` that are
/// strictly dominated.
fn dominated_positions(model: &Cgsp, agent: AgentId, w: StateId) -> Vec<usize> {
    let choices = model.choices_at(w);
    let width = choices[agent.0].len();
    let mut radices: Vec<usize> = choices.iter().map(Vec::len).collect();
    radices[agent.0] = 1;
    let beats = |better: usize, worse: usize| {
        Odometer::new(radices.clone()).all(|mut pos| {
            pos[agent.0] = worse;
            let lo = model.move_at(w, &pos);
            pos[agent.0] = better;
            let hi = model.move_at(w, &pos);
            match (lo, hi) {
                (Some(lo), Some(hi)) => model.rank(agent, w, lo) < model.rank(agent, w, hi),
                _ => true,
            }
        })
    };
    (0..width)
        .filter(|&a| (0..width).any(|b| b != a && beats(b, a)))
        .collect()
}

/// Actions of `agent` at `w` that are strictly worse than some alternative
/// against every combination of the other agents' available actions.
pub fn dominated_actions(
    model: &Cgsp,
    agent: AgentId,
    w: StateId,
) -> Result<Vec<ActionId>, ModelError> {
    let choices = model.choice_set(agent, w)?;
    Ok(dominated_positions(model, agent, w)
        .into_iter()
        .map(|p| choices[p])
        .collect())
}

/// Coalition joint actions at `w` in which no member plays a dominated
/// action. For the empty coalition this is the single empty assignment.
pub fn non_dominated_joint_actions(
    model: &Cgsp,
    coalition: &[AgentId],
    w: StateId,
) -> Result<Vec<CoalitionAction>, ModelError> {
    let mut members = coalition.to_vec();
    members.sort();
    members.dedup();
    let mut per_member = Vec::with_capacity(members.len());
    for &a in &members {
        let dominated = dominated_actions(model, a, w)?;
        let allowed: Vec<ActionId> = model
            .choice_set(a, w)?
            .iter()
            .copied()
            .filter(|act| !dominated.contains(act))
            .collect();
        per_member.push(allowed);
    }
    Ok(product(&per_member)
        .map(|acts| CoalitionAction(members.iter().copied().zip(acts).collect()))
        .collect())
}

/// Precomputed non-dominated choice positions for every state and agent.
#[derive(Clone, Debug)]
pub struct Rationality {
    // [state][agent] -> positions into the choice set
    allowed: Vec<Vec<Vec<usize>>>,
}

impl Rationality {
    pub fn compute(model: &Cgsp) -> Self {
        let allowed = model
            .state_ids()
            .map(|w| {
                model
                    .agent_ids()
                    .map(|a| {
                        let dominated = dominated_positions(model, a, w);
                        (0..model.choices_at(w)[a.0].len())
                            .filter(|p| !dominated.contains(p))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self { allowed }
    }

    pub(crate) fn allowed(&self, w: StateId, agent: AgentId) -> &[usize] {
        &self.allowed[w.0][agent.0]
    }
}
