use std::cmp::Ordering;

/// Index of a letter in a presentation's PBW alphabet; index order is PBW order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u16);

/// A PBW basis word stored as exponent runs with strictly increasing letters.
///
/// The empty run list is the unit monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    runs: Vec<(Letter, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn power(x: Letter, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        Self { runs: vec![(x, e)] }
    }

    /// Builds a monomial from runs; `None` unless letters strictly increase and
    /// exponents are positive.
    pub fn from_runs(runs: Vec<(Letter, u32)>) -> Option<Self> {
        let ok = runs.iter().all(|&(_, e)| e > 0) && runs.windows(2).all(|w| w[0].0 < w[1].0);
        ok.then_some(Self { runs })
    }

    /// Builds a monomial from a flat word; `None` if the word is out of order.
    pub fn from_sorted_word(word: &[Letter]) -> Option<Self> {
        let mut runs: Vec<(Letter, u32)> = Vec::new();
        for &x in word {
            match runs.last_mut() {
                Some((y, e)) if *y == x => *e += 1,
                Some((y, _)) if *y > x => return None,
                _ => runs.push((x, 1)),
            }
        }
        Some(Self { runs })
    }

    pub fn runs(&self) -> &[(Letter, u32)] {
        &self.runs
    }

    pub fn is_one(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.runs.iter().map(|r| r.1).sum()
    }

    pub fn first(&self) -> Option<Letter> {
        self.runs.first().map(|r| r.0)
    }

    pub fn last(&self) -> Option<Letter> {
        self.runs.last().map(|r| r.0)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.runs.iter().flat_map(|&(x, e)| std::iter::repeat_n(x, e as usize))
    }

    pub fn to_word(&self) -> Vec<Letter> {
        self.letters().collect()
    }

    /// Removes one copy of the first letter.
    pub(crate) fn drop_first(&self) -> Self {
        let mut runs = self.runs.clone();
        if runs[0].1 == 1 {
            runs.remove(0);
        } else {
            runs[0].1 -= 1;
        }
        Self { runs }
    }

    /// Removes one copy of the last letter.
    pub(crate) fn drop_last(&self) -> Self {
        let mut runs = self.runs.clone();
        let last = runs.len() - 1;
        if runs[last].1 == 1 {
            runs.pop();
        } else {
            runs[last].1 -= 1;
        }
        Self { runs }
    }

    /// Concatenation; callers guarantee `self.last() <= other.first()`.
    pub(crate) fn concat(&self, other: &Self) -> Self {
        let mut runs = self.runs.clone();
        for &(x, e) in &other.runs {
            match runs.last_mut() {
                Some((y, f)) if *y == x => *f += e,
                _ => runs.push((x, e)),
            }
        }
        Self { runs }
    }

    /// Renames letters with a monotone map. The result is re-sorted only if
    /// the map preserves order; otherwise `None`.
    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> Option<Self> {
        Self::from_runs(self.runs.iter().map(|&(x, e)| (f(x), e)).collect())
    }
}

/// Lexicographic order on the flattened letter sequences.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters().cmp(other.letters())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
