use std::cmp::Ordering;
use std::fmt;

/// One letter of the PBW alphabet.
///
/// `So { k, l }` is `I⁺_{kl}` with `k > l`, `Trans(k)` is `T⁺_k`, and
/// `Eps(i)` is the generator `J_i` of the ε-deformed `so_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorId {
    So { k: u32, l: u32 },
    Trans(u32),
    Eps(u32),
}

impl GeneratorId {
    pub fn so(k: u32, l: u32) -> Self {
        GeneratorId::So { k, l }
    }

    fn rank(&self) -> (u8, u32, i64) {
        match *self {
            GeneratorId::So { k, l } => (0, k, -(l as i64)),
            GeneratorId::Trans(k) => (1, k, 0),
            GeneratorId::Eps(i) => (2, i, 0),
        }
    }
}

/// PBW order: `I_{21} < I_{32} < I_{31} < I_{43} < I_{42} < I_{41} < … < T_1 < … < T_m`.
impl Ord for GeneratorId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for GeneratorId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorId::So { k, l } => write!(f, "I[{k},{l}]"),
            GeneratorId::Trans(k) => write!(f, "T[{k}]"),
            GeneratorId::Eps(i) => write!(f, "J[{i}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pbw_listing_order() {
        let listed = [
            GeneratorId::so(2, 1),
            GeneratorId::so(3, 2),
            GeneratorId::so(3, 1),
            GeneratorId::so(4, 3),
            GeneratorId::so(4, 2),
            GeneratorId::so(4, 1),
            GeneratorId::Trans(1),
            GeneratorId::Trans(2),
        ];
        assert!(listed.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(GeneratorId::so(3, 1).to_string(), "I[3,1]");
    }
}
