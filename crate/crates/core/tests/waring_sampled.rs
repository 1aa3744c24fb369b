use hybrid_fermat::waring::{proof_threshold, verify_decomposition, waring_decompose};
use hybrid_fermat::Int;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn sampled_n_above_thresholds() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in [4u32, 6, 8, 9, 10] {
        let bound = proof_threshold(k, true).max(proof_threshold(k, false));
        for _ in 0..50 {
            let n = &bound + Int::from(rng.gen_range(1u64..u64::MAX));
            let d = waring_decompose(&n, k).unwrap();
            assert!(verify_decomposition(&d));
            assert_eq!(d.parts.len(), k as usize + 2);
            assert!(d.parts.iter().all(|p| *p >= Int::from(1)));
        }
    }
}
