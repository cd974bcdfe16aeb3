use proptest::prelude::*;

use super::*;

fn s(n: i64, d: i64) -> SegmentClass {
    SegmentClass::from_ratio(n, d).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn addition_examples() {
    assert_eq!(seg_add(&s(1, 2), &s(1, 3)), s(5, 6));
    assert_eq!(seg_add(&s(3, 7), &SegmentClass::zero()), s(3, 7));
    assert_eq!(seg_add(&s(2, 7), &s(3, 5)), seg_add(&s(3, 5), &s(2, 7)));
    let (_, trace) = seg_add_traced(&s(1, 2), &s(1, 3));
    assert_eq!(trace.steps[2], ("P3".to_string(), "(5/6, 0)".to_string()));
}

#[test]
fn multiplication_examples() {
    assert_eq!(seg_mul(&s(1, 2), &s(1, 3)), s(1, 6));
    for a in [s(1, 2), s(2, 3), s(5, 1), s(7, 3)] {
        assert_eq!(seg_mul(&a, &SegmentClass::one()), a);
        assert_eq!(seg_mul(&SegmentClass::one(), &a), a);
        assert!(seg_mul(&a, &SegmentClass::zero()).is_zero());
    }
    let xs = [s(1, 2), s(2, 3), s(5, 1)];
    for a in &xs {
        for b in &xs {
            for c in &xs {
                assert_eq!(seg_mul(a, &seg_add(b, c)), seg_add(&seg_mul(a, b), &seg_mul(a, c)));
            }
        }
    }
    let (_, trace) = seg_mul_traced(&s(2, 1), &s(3, 1));
    let labels: Vec<&str> = trace.steps.iter().map(|(l, _)| l.as_str()).collect();
    assert_eq!(labels, ["P0", "P1", "P2", "P3", "P4", "prod"]);
    assert_eq!(trace.steps[2].1, "(6, 0)");
}

#[test]
fn trichotomy_examples() {
    assert_eq!(seg_trichotomy(&s(1, 2), &s(1, 2)), Trichotomy::Equal);
    assert_eq!(seg_trichotomy(&s(1, 3), &s(1, 2)), Trichotomy::Less(s(1, 6)));
    assert_eq!(seg_trichotomy(&s(5, 1), &s(2, 1)), Trichotomy::Greater(s(3, 1)));
    assert_eq!(seg_trichotomy(&SegmentClass::zero(), &s(2, 1)), Trichotomy::Less(s(2, 1)));
}

#[test]
fn geometry_primitives() {
    let o = PointQ::origin();
    let p = PointQ::new(q(3, 1), q(4, 1));
    assert_eq!(SegmentClass::of(&o, &p), Some(s(5, 1)));
    assert_eq!(SegmentClass::of(&o, &PointQ::new(q(1, 1), q(1, 1))), None);
    assert!(between(&o, &PointQ::new(q(3, 2), q(2, 1)), &p));
    assert!(!between(&o, &p, &p));
    let l = LineQ::through(&o, &p).unwrap();
    let m = LineQ::through(&PointQ::on_x_axis(q(1, 1)), &PointQ::on_y_axis(q(1, 1))).unwrap();
    let x = l.meet(&m).unwrap();
    assert!(l.contains(&x) && m.contains(&x));
    assert_eq!(x, PointQ::new(q(3, 7), q(4, 7)));
    assert!(l.meet(&l.parallel_through(&PointQ::on_x_axis(q(1, 1)))).is_none());
    assert!(SegmentClass::new(q(-1, 2)).is_none());
}

#[test]
fn signed_segments() {
    let a = SignedSegment::new(s(1, 3), s(1, 2));
    assert_eq!(a.value(), q(-1, 6));
    assert!(!a.is_positive());
    let n = a.normalize();
    assert!(n.pos.is_zero());
    assert_eq!(n.neg, s(1, 6));
    assert_eq!(a, n);
    let b = SignedSegment::from_segment(s(3, 1));
    assert_eq!(a.mul(&b).value(), q(-1, 2));
    assert_eq!(a.mul(&a).value(), q(1, 36));
    assert_eq!(a.sub(&a).normalize().value(), q(0, 1));
}

fn segment() -> impl Strategy<Value = SegmentClass> {
    (0i64..1000, 1i64..60).prop_map(|(n, d)| s(n, d))
}

fn positive_segment() -> impl Strategy<Value = SegmentClass> {
    (1i64..1000, 1i64..60).prop_map(|(n, d)| s(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn constructions_agree_with_arithmetic(a in segment(), b in segment()) {
        prop_assert_eq!(seg_add(&a, &b).length().clone(), a.length() + b.length());
        prop_assert_eq!(seg_mul(&a, &b).length().clone(), a.length() * b.length());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn semiring_laws(a in segment(), b in segment(), c in segment()) {
        prop_assert_eq!(seg_add(&a, &b), seg_add(&b, &a));
        prop_assert_eq!(seg_mul(&a, &b), seg_mul(&b, &a));
        prop_assert_eq!(seg_add(&seg_add(&a, &b), &c), seg_add(&a, &seg_add(&b, &c)));
        prop_assert_eq!(seg_mul(&seg_mul(&a, &b), &c), seg_mul(&a, &seg_mul(&b, &c)));
        prop_assert_eq!(seg_mul(&a, &seg_add(&b, &c)), seg_add(&seg_mul(&a, &b), &seg_mul(&a, &c)));
    }

    #[test]
    fn inverses_exist(a in positive_segment()) {
        let d = seg_inverse(&a).unwrap();
        prop_assert_eq!(seg_mul(&a, &d), SegmentClass::one());
    }

    #[test]
    fn trichotomy_witnesses(a in segment(), b in segment()) {
        match seg_trichotomy(&a, &b) {
            Trichotomy::Equal => prop_assert_eq!(&a, &b),
            Trichotomy::Less(c) => {
                prop_assert!(!c.is_zero());
                prop_assert_eq!(seg_add(&a, &c), b);
            }
            Trichotomy::Greater(d) => {
                prop_assert!(!d.is_zero());
                prop_assert_eq!(seg_add(&b, &d), a);
            }
        }
    }
}
