use proptest::prelude::*;
use superbranch::bratteli::BratteliDiagram;
use superbranch::branching::{induce, restrict};
use superbranch::coeff::{Laurent, QMonomial, QPolynomial};
use superbranch::setpartition::{
    arcset, crossing_number, enumerate_partitions, format_partition, nesting_number, parse_partition, Arc, SetPartition,
};
use superbranch::supercharacter::{char_value, char_value_by_arcs, degree};
use superbranch::Exec;

/// Partition of [n] from a restricted growth string built out of raw bytes.
fn from_bytes(n: usize, raw: &[u8]) -> SetPartition {
    let mut block = vec![0usize; n];
    let mut top = 0;
    for i in 1..n {
        block[i] = raw[i] as usize % (top + 2);
        top = top.max(block[i]);
    }
    let mut last: Vec<Option<usize>> = vec![None; n];
    let mut arcs = Vec::new();
    for (i, &b) in block.iter().enumerate() {
        if let Some(p) = last[b] {
            arcs.push(Arc::new(p + 1, i + 1));
        }
        last[b] = Some(i);
    }
    SetPartition::new(n, arcs).unwrap()
}

fn partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(any::<u8>(), n).prop_map(move |raw| from_bytes(n, &raw)))
}

fn arc_split(arcs: &[Arc], mask: u64) -> (Vec<Arc>, Vec<Arc>) {
    let (a, b): (Vec<_>, Vec<_>) = arcs.iter().enumerate().partition(|(k, _)| mask >> k & 1 == 1);
    (a.into_iter().map(|x| *x.1).collect(), b.into_iter().map(|x| *x.1).collect())
}

fn monomial() -> impl Strategy<Value = QMonomial> {
    (prop_oneof![Just(-1i8), Just(0), Just(1)], -4i64..6, 0u32..4).prop_map(|(s, e, t)| QMonomial::new(s, e, t))
}

proptest! {
    #[test]
    fn crossing_is_bilinear(raw in prop::collection::vec(any::<u8>(), 8), raw2 in prop::collection::vec(any::<u8>(), 8), mask in any::<u64>(), n in 2usize..=8) {
        let lambda = from_bytes(n, &raw);
        let mu = from_bytes(n, &raw2);
        let (m1, m2) = arc_split(mu.arcs(), mask);
        prop_assert_eq!(crossing_number(lambda.arcs(), &arcset::union(&m1, &m2)),
            crossing_number(lambda.arcs(), &m1) + crossing_number(lambda.arcs(), &m2));
        prop_assert_eq!(crossing_number(&arcset::union(&m1, &m2), lambda.arcs()),
            crossing_number(&m1, lambda.arcs()) + crossing_number(&m2, lambda.arcs()));
    }

    #[test]
    fn parts_cover_and_chain(sp in partition(9)) {
        let blocks = sp.parts();
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (1..=sp.n()).collect::<Vec<_>>());
        let mut arcs: Vec<Arc> = blocks.iter().flat_map(|b| b.windows(2).map(|w| Arc::new(w[0], w[1]))).collect();
        arcs.sort();
        prop_assert_eq!(arcs.as_slice(), sp.arcs());
    }

    #[test]
    fn parse_format_round_trip(sp in partition(12)) {
        let text = format_partition(&sp);
        prop_assert_eq!(parse_partition(&text, sp.n()).unwrap(), sp);
    }

    #[test]
    fn canonical_form_evaluates_the_same(ms in prop::collection::vec(monomial(), 0..8)) {
        let p: QPolynomial = ms.into_iter().collect();
        let c = p.canonicalize();
        for q in [2u64, 3, 5] {
            prop_assert_eq!(c.eval(q), p.eval(q));
        }
    }

    #[test]
    fn monomial_products(a in monomial(), b in monomial(), c in monomial()) {
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * QMonomial::ZERO, QMonomial::ZERO);
        prop_assert_eq!((a * b).canonical(), &a.canonical() * &b.canonical());
    }

    #[test]
    fn laurent_products(ms in prop::collection::vec(monomial(), 0..5), ns in prop::collection::vec(monomial(), 0..5)) {
        let a: QPolynomial = ms.into_iter().collect();
        let b: QPolynomial = ns.into_iter().collect();
        let (a, b) = (a.canonicalize(), b.canonicalize());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &Laurent::zero(), Laurent::zero());
    }
}

#[test]
fn nesting_never_exceeds_dimension() {
    for n in 1..=6 {
        let all: Vec<_> = enumerate_partitions(n).collect();
        for lambda in &all {
            for mu in &all {
                assert!(nesting_number(lambda.arcs(), mu.arcs()) <= lambda.dim(), "{lambda} {mu}");
            }
        }
    }
}

#[test]
fn character_values_factor_over_arcs() {
    for n in 1..=5 {
        let all: Vec<_> = enumerate_partitions(n).collect();
        for lambda in &all {
            assert!(degree(lambda).eval_int(2).unwrap() >= 1.into());
            for mu in &all {
                let v = char_value(lambda, mu).unwrap();
                assert!(v.is_zero() || v.eq() >= 0);
                assert_eq!(v, char_value_by_arcs(lambda, mu).unwrap(), "{lambda} {mu}");
            }
        }
    }
}

#[test]
fn diagram_agrees_with_branching_rules() {
    for n in 2..=4 {
        let k = 4;
        let d = BratteliDiagram::build(n, k, Exec::default()).unwrap();
        for h in 0..2 * k {
            for (v, from) in d.level(h).iter().enumerate() {
                let rule = if h % 2 == 0 { restrict(from).unwrap() } else { induce(from, n).unwrap() };
                let edges: Vec<(SetPartition, QMonomial)> =
                    d.children(h, v).iter().map(|(w, c)| (d.level(h + 1)[*w].clone(), *c)).collect();
                let want: Vec<(SetPartition, QMonomial)> = rule.iter().map(|(s, c)| (s.clone(), *c)).collect();
                let mut edges = edges;
                edges.sort_by(|a, b| a.0.cmp(&b.0));
                assert_eq!(edges, want, "n={n} level {h} from {from}");
            }
        }
        for h in 1..=2 * k {
            let mut hit = vec![false; d.level(h).len()];
            for v in 0..d.level(h - 1).len() {
                for (w, _) in d.children(h - 1, v) {
                    hit[*w] = true;
                }
            }
            assert!(hit.iter().all(|x| *x), "n={n} level {h}");
        }
        for j in 0..k {
            for lambda in d.level(2 * j) {
                assert!(d.level(2 * j + 2).contains(lambda), "n={n} {lambda} leaves at level {}", j + 1);
            }
        }
        for j in 0..=k {
            for m in d.level_multiplicities(2 * j) {
                let v = m.eval(2);
                assert!(v.is_integer() && v.numer() > &0.into());
            }
        }
    }
}

#[test]
fn multiplicities_account_for_the_whole_space() {
    for n in 2..=4 {
        for k in 0..=4 {
            let d = BratteliDiagram::build(n, k, Exec::default()).unwrap();
            let mut total = Laurent::zero();
            for (lambda, m) in d.level(2 * k).iter().zip(d.level_multiplicities(2 * k)) {
                total += &(&m * &degree(lambda).canonical());
            }
            assert_eq!(total, Laurent::q_pow((k * (n - 1)) as i64), "n={n} k={k}");
        }
    }
}
