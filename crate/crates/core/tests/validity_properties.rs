mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ratcap_core::gen::{agent_names, random_coalition, random_formula, random_model, FormulaParams, ModelParams};
use ratcap_core::logic::normal_form;
use ratcap_core::mc::{eval_at, mc, McOptions};
use ratcap_core::model::validate;
use ratcap_core::validity::{is_satisfiable, is_valid, maximal_neat_families, pad, Decider};
use ratcap_core::{Coalition, Formula, Modality};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn verdicts_agree_with_the_model_checker(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let agents = agent_names(2);
        let phi = random_formula(&mut rng, &FormulaParams::next_only(agents.clone(), 2));
        let verdict = is_valid(&phi, &agents).unwrap();
        if verdict.valid {
            prop_assert!(verdict.countermodel.is_none());
            for _ in 0..30 {
                let m = random_model(&mut rng, &ModelParams::default());
                let holds = mc(&m, &phi, McOptions::default()).unwrap();
                prop_assert_eq!(holds.len(), m.num_states(), "valid {} fails", phi);
            }
        } else {
            let (m, root) = verdict.countermodel.expect("invalid verdicts carry a model");
            prop_assert!(validate(&m).is_ok());
            prop_assert!(!eval_at(&m, root, &phi, McOptions::default()).unwrap(), "{}", phi);
        }
        let sat = is_satisfiable(&phi, &agents).unwrap();
        if let Some((m, root)) = &sat.model {
            prop_assert!(eval_at(m, *root, &phi, McOptions::default()).unwrap(), "{}", phi);
        }
        prop_assert_eq!(sat.satisfiable, sat.model.is_some());
    }

    #[test]
    fn padding_preserves_verdicts(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let agents = agent_names(2);
        let phi = random_formula(&mut rng, &FormulaParams::next_only(agents.clone(), 2));
        let mut decider = Decider::new(agents.clone()).unwrap();
        for d in normal_form(&phi).unwrap() {
            let padded = pad(&d, &agents);
            prop_assert_eq!(pad(&padded, &agents), padded.clone());
            prop_assert_eq!(decider.disjunction_valid(&padded), decider.disjunction_valid(&d));
            prop_assert!(padded.modal_degree() <= d.modal_degree().max(1));
        }
    }

    #[test]
    fn neat_families_are_disjoint_and_maximal(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let agents = agent_names(3);
        let cs: Vec<Coalition> = (0..rng.gen_range(0..7)).map(|_| random_coalition(&mut rng, &agents)).collect();
        let refs: Vec<&Coalition> = cs.iter().collect();
        let families = maximal_neat_families(&refs);
        prop_assert!(!families.is_empty());
        for fam in &families {
            for (i, &a) in fam.iter().enumerate() {
                for &b in &fam[i + 1..] {
                    prop_assert!(cs[a].is_disjoint(&cs[b]));
                }
            }
            for extra in 0..cs.len() {
                if !fam.contains(&extra) {
                    prop_assert!(fam.iter().any(|&a| !cs[a].is_disjoint(&cs[extra])));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn layered_member_embedding_preserves_satisfiability(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let agents = agent_names(2);
        let phi = random_formula(&mut rng, &FormulaParams::next_only(agents.clone(), 2));
        let lhs = is_satisfiable(&phi, &agents).unwrap().satisfiable;
        let rhs = is_satisfiable(&common::embed_layered(&phi, &agents), &agents).unwrap().satisfiable;
        prop_assert_eq!(lhs, rhs, "{}", phi);
    }
}

fn sat_checked(phi: &Formula, agents: &[String]) -> bool {
    let v = is_satisfiable(phi, agents).unwrap();
    if let Some((m, root)) = &v.model {
        assert!(eval_at(m, *root, phi, McOptions::default()).unwrap(), "{phi}");
    }
    v.satisfiable
}

#[test]
fn root_guarded_embedding_breaks_on_theorems_under_negation() {
    let agents = agent_names(2);
    let one = Coalition::new(["1"]);
    let both = Coalition::new(["1", "2"]);
    // the other agent's rat atom need not be forceable by agent 1
    let e1 = Formula::next(Modality::rational(one.clone()), Formula::True).not();
    // guards only constrain the root's successors
    let e2 = Formula::next(
        Modality::plain(one),
        Formula::next(Modality::rational(both), Formula::True),
    )
    .not();
    for phi in [e1, e2] {
        assert!(!sat_checked(&phi, &agents), "{phi}");
        assert!(sat_checked(&common::embed(&phi, &agents), &agents), "{phi}");
        assert!(!sat_checked(&common::embed_layered(&phi, &agents), &agents), "{phi}");
    }
}
