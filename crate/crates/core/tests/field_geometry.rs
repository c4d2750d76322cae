use std::collections::HashSet;

use xorclique_core::affine_plane::{line_intersect, parallel_classes, PlanePoint};
use xorclique_core::gf_field::{is_prime_power, Field};
use xorclique_core::Error;

fn prime_powers(max: u64) -> Vec<u64> {
    (2..=max).filter(|&q| is_prime_power(q)).collect()
}

#[test]
fn prime_power_detection_matches_trial_factorization() {
    for q in 0..=300u64 {
        let mut primes = HashSet::new();
        let mut m = q;
        let mut d = 2;
        while d * d <= m {
            while m % d == 0 {
                primes.insert(d);
                m /= d;
            }
            d += 1;
        }
        if m > 1 {
            primes.insert(m);
        }
        assert_eq!(is_prime_power(q), primes.len() == 1, "q={q}");
    }
}

#[test]
fn field_axioms_exhaustive() {
    for q in prime_powers(64) {
        let f = Field::new(q).unwrap();
        let els: Vec<_> = f.elements().collect();
        assert_eq!(els.len() as u64, q);
        let (zero, one) = (els[0], els[1]);
        for &a in &els {
            assert_eq!(f.add(a, zero), a);
            assert_eq!(f.mul(a, one), a);
            assert_eq!(f.add(a, f.neg(a)), zero);
            if a != zero {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), one);
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.sub(f.add(a, b), b), a);
                if a != zero && b != zero {
                    assert_ne!(f.mul(a, b), zero, "zero divisor in GF({q})");
                }
                if q <= 32 {
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
        assert_eq!(f.inv(zero), Err(Error::DivisionByZero));
    }
}

#[test]
fn multiplicative_group_is_cyclic() {
    for q in prime_powers(64) {
        let f = Field::new(q).unwrap();
        let generators = f
            .elements()
            .filter(|&a| f.multiplicative_order(a) == Some(q as u32 - 1))
            .count();
        assert!(generators > 0, "GF({q}) has no generator");
    }
}

#[test]
fn characteristic_sums_to_zero() {
    for q in prime_powers(64) {
        let f = Field::new(q).unwrap();
        let one = f.element(1).unwrap();
        let mut acc = f.element(0).unwrap();
        for i in 1..=f.characteristic() {
            acc = f.add(acc, one);
            assert_eq!(acc.is_zero(), i == f.characteristic());
        }
    }
}

#[test]
fn prime_fields_agree_with_modular_arithmetic() {
    for q in [2u64, 3, 5, 7, 11, 13, 31, 61] {
        let f = Field::new(q).unwrap();
        for a in 0..q as u32 {
            for b in 0..q as u32 {
                let (x, y) = (f.element(a).unwrap(), f.element(b).unwrap());
                assert_eq!(f.add(x, y).index() as u64, (a + b) as u64 % q);
                assert_eq!(f.mul(x, y).index() as u64, (a as u64 * b as u64) % q);
            }
        }
    }
}

#[test]
fn invalid_orders_rejected() {
    for q in [0u64, 1, 6, 10, 12, 15, 100] {
        assert_eq!(Field::new(q), Err(Error::NotPrimePower(q)));
    }
    assert!(matches!(
        Field::new(81),
        Err(Error::FieldTooLarge { q: 81, cap: 64 })
    ));
    assert!(Field::with_cap(81, 81).is_ok());
}

#[test]
fn lines_from_different_classes_meet_once() {
    for q in prime_powers(9) {
        let f = Field::new(q).unwrap();
        let classes = parallel_classes(&f);
        assert_eq!(classes.len() as u64, q + 1);
        let lines: Vec<_> = classes.iter().flat_map(|c| c.lines.iter()).collect();
        for a in &lines {
            for b in &lines {
                let naive: HashSet<PlanePoint> = a
                    .points
                    .iter()
                    .filter(|p| b.points.contains(p))
                    .copied()
                    .collect();
                let got = line_intersect(a, b).unwrap();
                assert_eq!(got.iter().copied().collect::<HashSet<_>>(), naive);
                let expect = if a.class_id != b.class_id {
                    1
                } else if a.offset == b.offset {
                    q as usize
                } else {
                    0
                };
                assert_eq!(naive.len(), expect, "q={q}");
            }
        }
    }
}

#[test]
fn parallel_classes_partition_the_plane() {
    for q in prime_powers(16) {
        let f = Field::new(q).unwrap();
        for class in parallel_classes(&f) {
            assert_eq!(class.lines.len() as u64, q);
            let mut seen = vec![0u32; (q * q) as usize];
            for l in &class.lines {
                assert_eq!(l.points.len() as u64, q);
                for p in l.point_indices() {
                    seen[p] += 1;
                }
            }
            assert!(
                seen.iter().all(|&c| c == 1),
                "q={q} class {}",
                class.class_id
            );
        }
    }
}

#[test]
fn two_points_determine_one_line() {
    for q in prime_powers(9) {
        let f = Field::new(q).unwrap();
        let lines: Vec<_> = parallel_classes(&f)
            .into_iter()
            .flat_map(|c| c.lines)
            .collect();
        assert_eq!(lines.len() as u64, q * (q + 1));
        let n = (q * q) as usize;
        let mut count = vec![0u32; n * n];
        for l in &lines {
            let pts: Vec<usize> = l.point_indices().collect();
            for &a in &pts {
                for &b in &pts {
                    count[a * n + b] += 1;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let expect = if a == b { q as u32 + 1 } else { 1 };
                assert_eq!(count[a * n + b], expect);
            }
        }
    }
}

#[test]
fn mixed_field_lines_rejected() {
    let (f2, f3) = (Field::new(2).unwrap(), Field::new(3).unwrap());
    let a = parallel_classes(&f2)[0].lines[0].clone();
    let b = parallel_classes(&f3)[0].lines[0].clone();
    assert_eq!(line_intersect(&a, &b), Err(Error::MixedFields(2, 3)));
}
