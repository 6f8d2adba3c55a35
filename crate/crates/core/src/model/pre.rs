use super::{AgentId, Cgsp, Odometer, Rationality, StateId};
use crate::stateset::StateSet;

/// Whether `coalition` has an available joint action at `w` (restricted to
/// non-dominated actions when `rational` is given) all of whose completions
/// lead into `target`.
pub(crate) fn can_force(
    model: &Cgsp,
    w: StateId,
    coalition: &[bool],
    rational: Option<&Rationality>,
    target: impl Fn(StateId) -> bool,
) -> bool {
    let choices = model.choices_at(w);
    if choices.iter().any(Vec::is_empty) {
        return false;
    }
    let members: Vec<usize> = (0..coalition.len()).filter(|&i| coalition[i]).collect();
    let member_options: Vec<Vec<usize>> = members
        .iter()
        .map(|&i| match rational {
            Some(r) => r.allowed(w, AgentId(i)).to_vec(),
            None => (0..choices[i].len()).collect(),
        })
        .collect();
    let others: Vec<usize> = choices
        .iter()
        .enumerate()
        .map(|(i, c)| if coalition[i] { 1 } else { c.len() })
        .collect();
    Odometer::new(member_options.iter().map(Vec::len).collect()).any(|pick| {
        Odometer::new(others.clone()).all(|mut pos| {
            for (slot, &i) in members.iter().enumerate() {
                pos[i] = member_options[slot][pick[slot]];
            }
            model.move_at(w, &pos).is_some_and(&target)
        })
    })
}

pub(crate) fn coalition_mask(model: &Cgsp, coalition: &[AgentId]) -> Vec<bool> {
    let mut mask = vec![false; model.num_agents()];
    for a in coalition {
        mask[a.0] = true;
    }
    mask
}

/// States from which `coalition` can force the next state into `q`.
pub fn pre(model: &Cgsp, coalition: &[AgentId], q: &StateSet) -> StateSet {
    let mask = coalition_mask(model, coalition);
    StateSet::from_fn(model.num_states(), |w| {
        can_force(model, w, &mask, None, |v| q.contains(v))
    })
}

/// Like [`pre`], but the coalition may only use non-dominated actions.
pub fn pre_rat(model: &Cgsp, coalition: &[AgentId], q: &StateSet) -> StateSet {
    let rationality = Rationality::compute(model);
    let mask = coalition_mask(model, coalition);
    StateSet::from_fn(model.num_states(), |w| {
        can_force(model, w, &mask, Some(&rationality), |v| q.contains(v))
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::m_cross;
    use super::*;

    fn set(model: &Cgsp, names: &[&str]) -> StateSet {
        StateSet::from_ids(
            model.num_states(),
            names.iter().map(|n| model.state_id(n).unwrap()),
        )
    }

    #[test]
    fn grand_coalition_reaches_q1_from_q0() {
        let m = m_cross();
        let all: Vec<AgentId> = m.agent_ids().collect();
        let r = pre(&m, &all, &set(&m, &["q1"]));
        assert!(r.contains(m.state_id("q0").unwrap()));
    }

    #[test]
    fn trivial_targets() {
        let m = m_cross();
        let n = m.num_states();
        for coalition in [vec![], vec![AgentId(0)], vec![AgentId(1)], vec![AgentId(0), AgentId(1)]] {
            assert_eq!(pre(&m, &coalition, &StateSet::full(n)), StateSet::full(n));
            assert!(pre(&m, &coalition, &StateSet::empty(n)).is_empty());
            assert!(pre_rat(&m, &coalition, &StateSet::empty(n)).is_empty());
        }
    }

    #[test]
    fn v1_rationally_avoids_crash_at_q0() {
        let m = m_cross();
        let safe = set(&m, &["q0", "q1", "q2", "q3"]);
        let r = pre_rat(&m, &[AgentId(0)], &safe);
        assert!(r.contains(m.state_id("q0").unwrap()));
    }

    #[test]
    fn rationality_restricts_v1_at_q2() {
        // at q2, v1 can stay put only by skipping, which is dominated
        let m = m_cross();
        let target = set(&m, &["q2"]);
        let q2 = m.state_id("q2").unwrap();
        assert!(pre(&m, &[AgentId(0)], &target).contains(q2));
        assert!(!pre_rat(&m, &[AgentId(0)], &target).contains(q2));
    }

    #[test]
    fn empty_coalition_rational_equals_plain() {
        let m = m_cross();
        let q = set(&m, &["q1", "q3"]);
        assert_eq!(pre(&m, &[], &q), pre_rat(&m, &[], &q));
    }
}
