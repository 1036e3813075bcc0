//! Engine-level instances of the series identities beyond the acceptance
//! criteria: the [lambda_j, G] product decomposition, the elementary
//! abelian layer orders, the upper central series by brute force, and the
//! order oracle at a fourth prime.

use num_bigint::BigUint;

use dispogroup::engine::{self, subgroup_closure, GroupContext};
use dispogroup::GroupParams;

const CAP: usize = 2_000_000;

#[test]
fn closure_of_generators_is_whole_group() {
    let ctx = GroupContext::new(3, 2, 2).unwrap();
    let gens = engine::group_generators(&ctx);
    let set = subgroup_closure(&ctx, &gens, &gens, CAP).unwrap();
    assert_eq!(set.len(), 243);
}

// [lambda_2, G] = gamma_2^p gamma_3 = lambda_3 ∩ gamma_2 at (5,2,3).
#[test]
fn lambda2_commutator_decomposition_at_523() {
    let ctx = GroupContext::new(5, 2, 3).unwrap();
    let group_gens = engine::group_generators(&ctx);

    let lambda2_gens = engine::lambda_generators(&ctx, 2).unwrap();
    let mut lhs_gens = Vec::new();
    for s in &lambda2_gens {
        for x in &group_gens {
            lhs_gens.push(s.commutator(x).unwrap());
        }
    }
    let lhs = subgroup_closure(&ctx, &lhs_gens, &group_gens, CAP).unwrap();

    let mut rhs_gens: Vec<_> = engine::gamma_generators(&ctx, 2)
        .unwrap()
        .iter()
        .map(|g| g.power(5))
        .collect();
    rhs_gens.extend(engine::gamma_generators(&ctx, 3).unwrap());
    let rhs = subgroup_closure(&ctx, &rhs_gens, &group_gens, CAP).unwrap();

    assert_eq!(lhs.len(), rhs.len());
    assert!(lhs.set_eq(&rhs), "[lambda_2, G] != gamma_2^p gamma_3");

    let lambda3 = engine::lambda_subgroup(&ctx, 3, CAP).unwrap();
    let gamma2 = engine::gamma_subgroup(&ctx, 2, CAP).unwrap();
    let meet = lambda3.intersection(&gamma2);
    assert!(lhs.set_eq(&meet), "[lambda_2, G] != lambda_3 ∩ gamma_2");
}

// |(lambda_2 ∩ gamma_2) / (lambda_3 ∩ gamma_2)| = p^chi_2(2) = 3 at (3,2,2).
#[test]
fn layer_order_at_322() {
    let ctx = GroupContext::new(3, 2, 2).unwrap();
    let lambda2 = engine::lambda_subgroup(&ctx, 2, CAP).unwrap();
    let lambda3 = engine::lambda_subgroup(&ctx, 3, CAP).unwrap();
    let gamma2 = engine::gamma_subgroup(&ctx, 2, CAP).unwrap();
    let upper = lambda2.intersection(&gamma2);
    let lower = lambda3.intersection(&gamma2);
    assert_eq!(lower.len(), 1);
    assert_eq!(upper.len() / lower.len(), 3);
}

// Z_1 = lambda_2 and Z_2 = G at (3,2,2), both by direct commutation tests.
#[test]
fn upper_central_series_at_322() {
    let ctx = GroupContext::new(3, 2, 2).unwrap();
    let whole = engine::full_group(&ctx, CAP).unwrap();
    let z1 = engine::center(&ctx, CAP).unwrap();
    let lambda2 = engine::lambda_subgroup(&ctx, 2, CAP).unwrap();
    assert!(z1.set_eq(&lambda2));

    // g lies in Z_2 iff [g, x] falls in Z_1 for both generators
    let gens = engine::group_generators(&ctx);
    let z2_size = whole
        .iter()
        .filter(|g| gens.iter().all(|x| z1.contains(&g.commutator(x).unwrap())))
        .count();
    assert_eq!(
        z2_size,
        whole.len(),
        "Z_2 must be the whole group at class 2"
    );
}

// Order oracle at a fourth prime: (7,2,3), the subgroups below the cap.
#[test]
fn order_oracle_at_723() {
    let prm = GroupParams::new(7, 2, 3).unwrap();
    let ctx = GroupContext::new(7, 2, 3).unwrap();
    let gamma2 = engine::gamma_subgroup(&ctx, 2, CAP).unwrap();
    assert_eq!(gamma2.len(), 2401);
    assert_eq!(prm.gamma_order_exponent(2).unwrap(), BigUint::from(4u32));
    let gamma3 = engine::gamma_subgroup(&ctx, 3, CAP).unwrap();
    assert_eq!(gamma3.len(), 49);
    let gamma4 = engine::gamma_subgroup(&ctx, 4, CAP).unwrap();
    assert_eq!(gamma4.len(), 1);
    let lambda3 = engine::lambda_subgroup(&ctx, 3, CAP).unwrap();
    assert_eq!(lambda3.len(), 16807);
    assert_eq!(prm.lambda_order_exponent(3).unwrap(), BigUint::from(5u32));
    // lambda_2 would have 7^8 elements, past the cap
    assert!(matches!(
        engine::lambda_subgroup(&ctx, 2, 100_000),
        Err(engine::EngineError::CapExceeded { .. })
    ));
    for g in engine::group_generators(&ctx) {
        assert_eq!(g.element_order().to_string(), "7^3");
    }
}

// Both series terminate at the trivial subgroup at (5,2,3).
#[test]
fn series_terminate_at_523() {
    let ctx = GroupContext::new(5, 2, 3).unwrap();
    assert_eq!(engine::gamma_subgroup(&ctx, 4, CAP).unwrap().len(), 1);
    assert_eq!(engine::lambda_subgroup(&ctx, 4, CAP).unwrap().len(), 1);
}

// Concrete 1-capability: |G(5,2,3)| / |Z(G(5,2,3))| = |G(5,2,2)| at the
// order level, with the center order taken from the enumerated lambda_3.
#[test]
fn capability_order_identity_via_lambda_sizes() {
    let ctx = GroupContext::new(5, 2, 3).unwrap();
    let lambda3 = engine::lambda_subgroup(&ctx, 3, CAP).unwrap();
    let mut z_exponent = 0u64;
    let mut size = lambda3.len();
    while size > 1 {
        assert_eq!(size % 5, 0);
        size /= 5;
        z_exponent += 1;
    }
    let big = GroupParams::new(5, 2, 3).unwrap().group_order_exponent();
    let small = GroupParams::new(5, 2, 2).unwrap().group_order_exponent();
    assert_eq!(big - BigUint::from(z_exponent), small);
}

// gamma_2 closure agrees between (5,2,2) and its lower_central_series entry.
#[test]
fn series_and_direct_subgroups_agree() {
    let ctx = GroupContext::new(5, 2, 2).unwrap();
    let series = engine::lower_central_series(&ctx, CAP).unwrap();
    let sizes: Vec<usize> = series.iter().map(|s| s.len()).collect();
    assert_eq!(sizes, vec![3125, 5, 1]);
    let direct = engine::gamma_subgroup(&ctx, 2, CAP).unwrap();
    assert!(direct.set_eq(&series[1]));
    let lambdas = engine::lambda_series(&ctx, CAP).unwrap();
    assert_eq!(
        lambdas.iter().map(|s| s.len()).collect::<Vec<_>>(),
        vec![3125, 125, 1]
    );
    let z = engine::center(&ctx, CAP).unwrap();
    assert_eq!(z.len(), 125);
    assert!(z.set_eq(&lambdas[1]));
}
