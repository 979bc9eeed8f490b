//! Property suites over seeded random systems and random signatures.

mod common;

use std::cmp::Ordering;

use proptest::prelude::*;
use sigb::sigcore::Rewriter;
use sigb::{
    buchberger, compute, gen_random, reduced_gb, EngineConfig, ModuleOrder, ModuleOrderKind, Monomial, ReductionMode, RewriteOrder, RunStats,
    Signature,
};

use common::{sig_basis, syzygies_minimal, top_s_reducible_pairs};

fn kind() -> impl Strategy<Value = ModuleOrderKind> {
    prop::sample::select(ModuleOrderKind::ALL.to_vec())
}

fn rewrite() -> impl Strategy<Value = RewriteOrder> {
    prop::sample::select(vec![RewriteOrder::Add, RewriteOrder::Rat])
}

fn config(kind: ModuleOrderKind, rw: RewriteOrder) -> EngineConfig {
    EngineConfig {
        module_order: kind,
        rewrite: rw,
        ..Default::default()
    }
}

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..3, n).prop_map(|e| Monomial::new(&e).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn rb_agrees_with_buchberger(seed in 0u64..10_000, hom in any::<bool>(), kind in kind(), rw in rewrite()) {
        let spec = gen_random(3, 2, 3, seed, hom).unwrap();
        let r = &spec.ring;
        let run = match compute(r, &spec.gens, &config(kind, rw)) {
            Ok(run) => run,
            Err(sigb::Error::AmbiguousOrder(..)) => return Ok(()),
            Err(e) => panic!("{e}"),
        };
        let mut st = RunStats::default();
        let want = reduced_gb(r, &buchberger(r, &spec.gens, Default::default(), &mut st).unwrap());
        prop_assert_eq!(reduced_gb(r, &run.polys()), want);
        prop_assert!(syzygies_minimal(&run));
        prop_assert_eq!(run.stats.syzygy_count_pruned, run.syzygies.len() as u64);
        prop_assert!(run.stats.syzygy_count >= run.stats.syzygy_count_pruned);
    }

    #[test]
    fn rat_basis_has_no_top_s_reducible_element(seed in 0u64..10_000, hom in any::<bool>(), kind in kind()) {
        let spec = gen_random(3, 2, 3, seed, hom).unwrap();
        if let Ok(run) = compute(&spec.ring, &spec.gens, &config(kind, RewriteOrder::Rat)) {
            prop_assert_eq!(top_s_reducible_pairs(&run), vec![]);
        }
    }

    #[test]
    fn generic_homogeneous_sequences_have_no_zero_reductions(seed in 0u64..10_000, dpot in any::<bool>()) {
        let spec = gen_random(4, 2, 2, seed, true).unwrap();
        let kind = if dpot { ModuleOrderKind::Dpot } else { ModuleOrderKind::Pot };
        let run = compute(&spec.ring, &spec.gens, &config(kind, RewriteOrder::Rat)).unwrap();
        prop_assert_eq!(run.stats.zero_reductions, 0);
    }

    #[test]
    fn regular_s_reduction_keeps_signature_and_leaves_no_reducer(seed in 0u64..10_000, var in 0usize..3, full in any::<bool>()) {
        let spec = gen_random(3, 2, 2, seed, true).unwrap();
        let r = &spec.ring;
        let run = compute(r, &spec.gens, &config(ModuleOrderKind::Dpot, RewriteOrder::Rat)).unwrap();
        let g = sig_basis(&run);
        let b = Monomial::var(r.nvars(), var, 1);
        let mode = if full { ReductionMode::Full } else { ReductionMode::Top };
        for e in g.elems() {
            let s = e.sig.mul(&b);
            let mut st = RunStats::default();
            let p = e.poly.mul_term(&r.field, 1, &b);
            let once = g.regular_s_reduce(&r.field, p, &s, &run.syzygies, &run.order, RewriteOrder::Rat, mode, &mut st);
            let twice = g.regular_s_reduce(&r.field, once.clone(), &s, &run.syzygies, &run.order, RewriteOrder::Rat, mode, &mut st);
            prop_assert_eq!(&once, &twice);
            if !once.is_zero() {
                prop_assert!(g.find_regular_reducer(once.lm(), &s, &run.syzygies, &run.order, RewriteOrder::Rat).is_none());
            }
        }
    }

    #[test]
    fn syzygy_criterion_is_a_rewrite(seed in 0u64..10_000, kind in kind()) {
        let spec = gen_random(3, 2, 3, seed, false).unwrap();
        let Ok(run) = compute(&spec.ring, &spec.gens, &config(kind, RewriteOrder::Rat)) else { return Ok(()) };
        let g = sig_basis(&run);
        for (k, e) in g.elems().iter().enumerate() {
            for h in run.syzygies.iter().filter(|h| h.index == e.sig.index) {
                let b = e.sig.mon.quotient_of(&e.sig.mon.lcm_with(&h.mon));
                prop_assert!(g.is_rewritable(&b, k, &run.syzygies, RewriteOrder::Rat));
                let rewriter = g.canonical_rewriter(&e.sig.mul(&b), &run.syzygies, RewriteOrder::Rat, &run.order);
                prop_assert!(matches!(rewriter, Ok(Rewriter::Syzygy(_))));
            }
        }
    }

    #[test]
    fn module_orders_are_total_and_multiplicative(
        seed in 0u64..10_000,
        kind in kind(),
        a in monomial(3), b in monomial(3), m in monomial(3),
        i in 1usize..=3, j in 1usize..=3,
    ) {
        let spec = gen_random(3, 1, 3, seed, false).unwrap();
        let Ok(order) = ModuleOrder::new(kind, &spec.gens) else { return Ok(()) };
        let (s, t) = (Signature::new(a, i), Signature::new(b, j));
        let o = order.cmp(&s, &t);
        prop_assert_eq!(o, order.cmp(&t, &s).reverse());
        prop_assert_eq!(o == Ordering::Equal, s == t);
        prop_assert_eq!(order.cmp(&s.mul(&m), &t.mul(&m)), o);
        prop_assert_ne!(order.cmp(&s.mul(&m), &s), Ordering::Less);
    }
}
