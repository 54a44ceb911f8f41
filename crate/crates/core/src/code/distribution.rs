//! Weight and distance distributions and the MacWilliams transform.
//!
//! Distance distributions are generic over the scalar. Exact rationals are
//! the default (see [`crate::ExactDistribution`]) because nonlinear codes can
//! have non-integer `B_i` and the dual distance is read off as the first
//! nonzero `B_j^⊥`, which floating point cannot decide reliably.

use num_traits::{FromPrimitive, Num, Signed};

/// Counts `A_0..A_n` of codewords by Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<u64>) -> Self {
        assert!(!counts.is_empty(), "weight distribution needs A_0");
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    /// Smallest `i > 0` with `A_i != 0`.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| self.counts[i] != 0)
    }

    /// `W(x, -y) = W(x, y)`: no codeword of odd weight.
    pub fn is_even(&self) -> bool {
        self.counts.iter().skip(1).step_by(2).all(|&c| c == 0)
    }

    /// For a linear code the distance distribution equals the weight distribution.
    pub fn to_distance_distribution<T: Num + Clone + FromPrimitive>(
        &self,
    ) -> DistanceDistribution<T> {
        DistanceDistribution::new(
            self.counts
                .iter()
                .map(|&c| T::from_u64(c).expect("count fits the scalar type"))
                .collect(),
        )
    }
}

/// Distribution `B_0..B_n` over a scalar `T`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceDistribution<T> {
    values: Vec<T>,
}

impl<T: Num + Clone + FromPrimitive> DistanceDistribution<T> {
    pub fn new(values: Vec<T>) -> Self {
        assert!(!values.is_empty(), "distribution needs B_0");
        Self { values }
    }

    /// `B_i = pair_counts[i] / size` where `pair_counts[i]` counts ordered pairs at distance `i`.
    pub fn from_pair_counts(pair_counts: &[u64], size: u64) -> Self {
        let size = T::from_u64(size).expect("size fits the scalar type");
        Self::new(
            pair_counts
                .iter()
                .map(|&c| T::from_u64(c).expect("count fits the scalar type") / size.clone())
                .collect(),
        )
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn value(&self, i: usize) -> T {
        self.values.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn length(&self) -> usize {
        self.values.len() - 1
    }

    /// `Σ B_i`, which equals the number of codewords.
    pub fn size(&self) -> T {
        self.values
            .iter()
            .cloned()
            .fold(T::zero(), |acc, v| acc + v)
    }

    /// MacWilliams transform `B_j^⊥ = (1/|C|) Σ_i B_i K_j(i)`.
    ///
    /// Since `Σ B_i = |C|`, applying the transform twice returns the input.
    pub fn macwilliams(&self) -> Self {
        let n = self.length();
        let k = krawtchouk_table::<T>(n);
        let size = self.size();
        let values = (0..=n)
            .map(|j| {
                let s = (0..=n).fold(T::zero(), |acc, i| {
                    acc + self.values[i].clone() * k[j][i].clone()
                });
                s / size.clone()
            })
            .collect();
        Self { values }
    }

    /// Smallest `i > 0` with `B_i != 0`. Applied to the dual distribution this is the dual distance.
    pub fn first_nonzero_index(&self) -> Option<usize> {
        (1..self.values.len()).find(|&i| !self.values[i].is_zero())
    }
}

impl<T: Num + Clone + FromPrimitive + Signed> DistanceDistribution<T> {
    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }
}

/// Binomial coefficients `C(a, b)` for `0 <= a, b <= n`, built by Pascal's rule in `T`.
pub fn binomial_table<T: Num + Clone>(n: usize) -> Vec<Vec<T>> {
    let mut t = vec![vec![T::zero(); n + 1]; n + 1];
    for a in 0..=n {
        t[a][0] = T::one();
        for b in 1..=a {
            t[a][b] = t[a - 1][b - 1].clone() + t[a - 1][b].clone();
        }
    }
    t
}

/// Krawtchouk values `K_j(i) = Σ_s (-1)^s C(i, s) C(n-i, j-s)`, indexed `[j][i]`.
pub fn krawtchouk_table<T: Num + Clone>(n: usize) -> Vec<Vec<T>> {
    let binom = binomial_table::<T>(n);
    let c = |a: usize, b: usize| -> T {
        if b > a {
            T::zero()
        } else {
            binom[a][b].clone()
        }
    };
    (0..=n)
        .map(|j| {
            (0..=n)
                .map(|i| {
                    (0..=j).fold(T::zero(), |acc, s| {
                        let term = c(i, s) * c(n - i, j - s);
                        if s % 2 == 0 {
                            acc + term
                        } else {
                            acc - term
                        }
                    })
                })
                .collect()
        })
        .collect()
}
