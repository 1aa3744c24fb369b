//! Cross-module properties: constructions verify, obstructions never contradict
//! constructions or search hits.

use hybrid_fermat::brute::{brute_search, GcdFilter};
use hybrid_fermat::certificates::search_certificates;
use hybrid_fermat::constructors::{
    construct_thm2, construct_thm5, euclid_triples, verify_p_congruence, Thm5Params,
};
use hybrid_fermat::hybrid::classify_gcd;
use hybrid_fermat::obstructions::{obstruction_check, Status};
use hybrid_fermat::Int;
use num_traits::Pow;

#[test]
fn thm2_family_verifies() {
    for (a, b, c) in euclid_triples(100) {
        for n in [4u32, 5, 7, 8, 10, 11] {
            let s = construct_thm2(&a, &b, &c, n).unwrap();
            assert!(s.verify(), "({a}, {b}, {c}) n = {n}");
            // Also from a non-primitive triple.
            let s = construct_thm2(&(&a * 3), &(&b * 3), &(&c * 3), n).unwrap();
            assert!(s.verify());
        }
    }
}

#[test]
fn thm5_family_over_small_certificates() {
    for n in [5u32, 7, 11, 13] {
        let certs = search_certificates(n, &Int::from(10u64.pow(12)), 2).unwrap();
        assert!(!certs.is_empty());
        for cert in certs {
            for t in 0..=2 {
                let params = Thm5Params::new(n, cert.a.clone(), cert.b.clone(), cert.m.clone(), t);
                let (s, g) = construct_thm5(&params).unwrap();
                assert!(s.verify());
                let (p, k) = g.prime_power().unwrap();
                assert_eq!(*p, cert.p);
                let r = n % 3;
                assert_eq!(k % n, (r * n - 1) / 3 % n);
                assert_eq!(classify_gcd(&s.a, &s.b, &s.c).unwrap(), g);
                assert_eq!(g.g, Pow::pow(&cert.p, k));
                assert!(verify_p_congruence(&params));
                let v = obstruction_check(n, p, k).unwrap();
                assert_ne!(v.status, Status::ProvenNone, "{n} {p} {k}");
                assert_ne!(v.status, Status::ConjecturedNone, "{n} {p} {k}");
            }
        }
    }
}

#[test]
fn brute_hits_never_contradict_proven_verdicts() {
    for n in [4u32, 5, 7] {
        for hit in brute_search(n, 3000, Some(GcdFilter::PrimePower(None))).unwrap() {
            let (p, k) = hit.gcd.prime_power().unwrap();
            let v = obstruction_check(n, p, k).unwrap();
            assert_ne!(v.status, Status::ProvenNone, "{}", hit.solution);
        }
    }
}

#[test]
fn no_prime_gcd_hits_for_odd_prime_exponents() {
    for n in [3u32, 5, 7] {
        assert!(brute_search(n, 2000, Some(GcdFilter::PRIME))
            .unwrap()
            .is_empty());
    }
}
