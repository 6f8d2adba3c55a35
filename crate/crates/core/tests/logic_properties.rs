use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use ratcap_core::gen::{agent_names, random_formula, random_model, FormulaParams, ModelParams};
use ratcap_core::logic::{conjunction_of, normal_form, translate_tr};
use ratcap_core::mc::{mc, McOptions};
use ratcap_core::{parse_formula, Formula};

fn has_rational(phi: &Formula) -> bool {
    let mut found = false;
    phi.visit(&mut |f| match f {
        Formula::Next(m, _) | Formula::Always(m, _) | Formula::Until(m, _, _) => {
            found |= m.rational
        }
        _ => {}
    });
    found
}

/// Operands guarded by the translation: one per rational X or G, two per rational U.
fn guarded_operands(phi: &Formula) -> usize {
    let mut n = 0;
    phi.visit(&mut |f| match f {
        Formula::Next(m, _) | Formula::Always(m, _) if m.rational => n += 1,
        Formula::Until(m, _, _) if m.rational => n += 2,
        _ => {}
    });
    n
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn render_then_parse_is_identity(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let agents = agent_names(3);
        let phi = random_formula(&mut rng, &FormulaParams::full(agents.clone(), 3));
        let text = phi.to_string();
        let back = parse_formula(&text, &agents).unwrap();
        prop_assert_eq!(back, phi, "rendered as {}", text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn translation_fixes_plain_formulas_and_grows_linearly(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let agents = agent_names(2);
        let phi = random_formula(&mut rng, &FormulaParams::full(agents.clone(), 3));
        let t = translate_tr(&phi, &agents).unwrap();
        prop_assert!(!has_rational(&t));
        if !has_rational(&phi) {
            prop_assert_eq!(&t, &phi);
        }
        // each guard `rat_1 & rat_2 & body` adds |AGT| atoms and |AGT| conjunctions
        let extra = guarded_operands(&phi) * 2 * agents.len();
        prop_assert_eq!(t.size(), phi.size() + extra);
        prop_assert_eq!(t.modal_degree(), phi.modal_degree());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normal_form_is_equivalent_on_random_models(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let agents = agent_names(2);
        let phi = random_formula(&mut rng, &FormulaParams::next_only(agents, 2));
        let nf = normal_form(&phi).unwrap();
        for d in &nf {
            prop_assert!(d.modal_degree() <= phi.modal_degree());
        }
        let psi = conjunction_of(&nf);
        let params = ModelParams::default();
        for _ in 0..30 {
            let m = random_model(&mut rng, &params);
            let lhs = mc(&m, &phi, McOptions::default()).unwrap();
            let rhs = mc(&m, &psi, McOptions::default()).unwrap();
            prop_assert_eq!(lhs, rhs, "{} vs {}", phi, psi);
        }
    }
}

#[test]
fn normal_form_rejects_temporal_operators() {
    let agents = agent_names(2);
    for text in ["<<1>> G p", "p -> <<1,2>>^r (p U q)"] {
        let phi = parse_formula(text, &agents).unwrap();
        assert!(normal_form(&phi).is_err(), "{text}");
    }
}
