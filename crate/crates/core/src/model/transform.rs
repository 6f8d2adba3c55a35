use std::collections::BTreeMap;

use super::{ActionId, Cgsp, CgsBuilder, JointAction, ModelError, Odometer, RankBlock, StateId};

/// Joint-action-disjoint copy of `model`.
///
/// Every state `w` is split into copies `w^δ`, one per joint action `δ` over
/// the model's action names. From any copy of `w`, joint action `δ` leads to
/// the copy `v^δ` of its original target `v`, so distinct joint actions
/// never share a target. Valuations and ranks are inherited from the
/// original states.
pub fn adjoint_transform(model: &Cgsp) -> Result<Cgsp, ModelError> {
    let agents = model.agents().to_vec();
    let actions = model.actions().to_vec();
    let radix = actions.len();
    let tags: Vec<JointAction> = Odometer::new(vec![radix; agents.len()])
        .map(|pos| JointAction(pos.into_iter().map(ActionId).collect()))
        .collect();
    let tag_index = |j: &JointAction| j.0.iter().fold(0usize, |acc, a| acc * radix + a.0);
    let copy = |w: StateId, j: &JointAction| StateId(w.0 * tags.len() + tag_index(j));

    let mut b = CgsBuilder::new(agents, actions)?;
    for w in model.state_ids() {
        for tag in &tags {
            let name = format!("{}^{}", model.state_name(w), model.render_joint(tag));
            b.add_state(name, model.props(w).iter().cloned())?;
        }
    }
    for w in model.state_ids() {
        for tag in &tags {
            for (joint, &v) in model.moves(w) {
                b.add_transition(copy(w, tag), joint.clone(), copy(v, joint))?;
            }
        }
    }
    let cgs = b.build()?;

    let mut blocks = Vec::new();
    for block in model.rank_blocks() {
        for tag in &tags {
            let mut ranks = BTreeMap::new();
            for (joint, &v) in model.moves(block.state) {
                ranks.insert(copy(v, joint), model.rank(block.agent, block.state, v));
            }
            blocks.push(RankBlock {
                agent: block.agent,
                state: copy(block.state, tag),
                ranks,
            });
        }
    }
    Cgsp::new(cgs, blocks)
}
