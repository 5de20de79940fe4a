//! Integer partitions and the per-partition combinatorial quantities of the
//! hypergeometric term: the generalized Pochhammer symbol and the cell
//! product `j_kappa`.

use crate::Real;

/// An integer partition: parts in non-increasing order, all positive.
///
/// The empty partition (weight 0) is allowed and indexes the leading series
/// term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, checking the ordering invariant.
    ///
    /// # Panics
    /// Panics if `parts` is not non-increasing or contains a zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be non-increasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Weight `k`: the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Arm length of cell `(row, col)` (0-based): cells strictly to its right.
    pub fn arm(&self, row: usize, col: u32) -> u32 {
        self.parts[row] - col - 1
    }

    /// Leg length of cell `(row, col)` (0-based): cells strictly below it.
    pub fn leg(&self, row: usize, col: u32) -> u32 {
        self.parts[row + 1..].iter().take_while(|&&p| p > col).count() as u32
    }
}

/// Iterator over the partitions of `weight` with at most `max_parts` parts,
/// in reverse-lexicographic order (`[4], [3,1], [2,2], [2,1,1], [1,1,1,1]`).
///
/// The order is fixed so that series truncation is reproducible bit-for-bit.
#[derive(Debug, Clone)]
pub struct Partitions {
    weight: u32,
    max_parts: u32,
    state: State,
}

#[derive(Debug, Clone)]
enum State {
    Fresh,
    At(Vec<u32>),
    Done,
}

/// Partitions of `weight` with at most `max_parts` parts (`None` = unbounded).
pub fn partitions(weight: u32, max_parts: Option<u32>) -> Partitions {
    Partitions {
        weight,
        max_parts: max_parts.unwrap_or(u32::MAX),
        state: State::Fresh,
    }
}

/// Materialized convenience wrapper around [`partitions`].
pub fn enumerate_partitions(weight: u32, max_parts: Option<u32>) -> Vec<Partition> {
    partitions(weight, max_parts).collect()
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        match std::mem::replace(&mut self.state, State::Done) {
            State::Fresh => {
                if self.weight == 0 {
                    self.state = State::Done;
                    return Some(Partition::empty());
                }
                if self.max_parts == 0 {
                    return None;
                }
                let first = vec![self.weight];
                self.state = State::At(first.clone());
                Some(Partition { parts: first })
            }
            State::At(current) => match self.successor(&current) {
                Some(next) => {
                    self.state = State::At(next.clone());
                    Some(Partition { parts: next })
                }
                None => None,
            },
            State::Done => None,
        }
    }
}

impl Partitions {
    /// Reverse-lexicographic successor among partitions with bounded length.
    ///
    /// Scanning pivots right-to-left: decrementing the pivot by one and
    /// refilling the suffix greedily with parts of the new pivot size is the
    /// immediate successor; the greedy fill also minimizes the part count, so
    /// if it does not fit in `max_parts` no smaller pivot value can.
    fn successor(&self, parts: &[u32]) -> Option<Vec<u32>> {
        let len = parts.len();
        let mut suffix_total: u64 = 0;
        for j in (0..len).rev() {
            suffix_total += u64::from(parts[j]);
            if parts[j] < 2 {
                continue;
            }
            let pivot = parts[j] - 1;
            let rest = suffix_total - u64::from(pivot);
            let slots = u64::from(self.max_parts) - j as u64 - 1;
            if rest > u64::from(pivot).saturating_mul(slots) {
                continue;
            }
            let mut next = parts[..j].to_vec();
            next.push(pivot);
            let full = (rest / u64::from(pivot)) as usize;
            next.extend(std::iter::repeat(pivot).take(full));
            let remainder = (rest % u64::from(pivot)) as u32;
            if remainder > 0 {
                next.push(remainder);
            }
            return Some(next);
        }
        None
    }
}

/// Generalized Pochhammer symbol: the product over rows `i` (1-based) of the
/// classical rising factorial `(a - (beta/2)(i-1))_{k_i}`.
///
/// A zero value is legitimate; it is the termination mechanism of the
/// integer-parameter series.
pub fn gen_pochhammer<T: Real>(a: T, kappa: &Partition, beta: T) -> T {
    let half = beta / T::of(2.0);
    let mut product = T::one();
    for (i, &part) in kappa.parts().iter().enumerate() {
        let base = a - half * T::of_usize(i);
        product = product * rising_factorial(base, part);
    }
    product
}

/// Classical rising factorial `(x)_n = x (x+1) ... (x+n-1)`.
pub fn rising_factorial<T: Real>(x: T, n: u32) -> T {
    let mut product = T::one();
    for j in 0..n {
        product = product * (x + T::of_usize(j as usize));
    }
    product
}

/// The Jack normalization constant `j_kappa`: the product over the diagram
/// cells of `(leg + (2/beta)(1 + arm)) (leg + 1 + (2/beta) arm)`.
///
/// Strictly positive; the empty partition gives 1.
pub fn j_kappa<T: Real>(kappa: &Partition, beta: T) -> T {
    let two_over = T::of(2.0) / beta;
    let mut product = T::one();
    for row in 0..kappa.parts().len() {
        for col in 0..kappa.parts()[row] {
            let arm = T::of_usize(kappa.arm(row, col) as usize);
            let leg = T::of_usize(kappa.leg(row, col) as usize);
            product = product
                * (leg + two_over * (T::one() + arm))
                * (leg + T::one() + two_over * arm);
        }
    }
    product
}
