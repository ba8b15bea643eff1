mod support;

use std::sync::LazyLock;

use proptest::prelude::*;
use qcenter_core::algebra::Presentation;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

static PRES: LazyLock<Vec<Presentation>> = LazyLock::new(support::presentations);

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parse_inverts_format(idx in 0usize..10, seed in any::<u64>()) {
        let pres = &PRES[idx];
        let a = support::random_element(&mut ChaCha8Rng::seed_from_u64(seed), pres);
        prop_assert_eq!(support::round_trip(&a, pres), Ok(()));
    }
}
