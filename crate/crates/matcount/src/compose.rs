//! Compositions of an integer into a fixed number of positive parts.

use crate::error::Error;

/// An ordered tuple `(t_1, ..., t_n)` of positive integers with a fixed sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    /// Validates that every part is positive and the parts sum to `target`.
    pub fn new(parts: Vec<u64>, target: u64) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::Domain("composition parts must be positive".into()));
        }
        let sum: u64 = parts.iter().sum();
        if sum != target {
            return Err(Error::Domain(format!(
                "composition parts sum to {sum}, expected {target}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn target(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// All compositions of `k` into exactly `n` positive parts, in lexicographic
/// order. The stream is empty when `n > k`; there are `C(k-1, n-1)`
/// compositions in total.
///
/// A composition corresponds to its strictly increasing prefix-sum tuple,
/// i.e. to an `(n-1)`-subset of `{1, ..., k-1}` of cut points, and
/// lexicographic order on compositions is lexicographic order on cut
/// points. The iterator keeps only the current cut combination, so state is
/// O(n).
pub fn compositions(k: u64, n: u64) -> Compositions {
    Compositions::new(k, n)
}

#[derive(Debug, Clone)]
pub struct Compositions {
    k: u64,
    // Current cut points, 0-based values in 0..k-1, strictly increasing.
    cuts: Vec<u64>,
    started: bool,
    done: bool,
}

impl Compositions {
    fn new(k: u64, n: u64) -> Self {
        let done = n > k || n == 0 || k == 0;
        let cuts = if done {
            Vec::new()
        } else {
            (0..n - 1).collect()
        };
        Compositions {
            k,
            cuts,
            started: false,
            done,
        }
    }

    fn current(&self) -> Composition {
        let mut parts = Vec::with_capacity(self.cuts.len() + 1);
        let mut prev = 0u64;
        for &c in &self.cuts {
            parts.push(c + 1 - prev);
            prev = c + 1;
        }
        parts.push(self.k - prev);
        Composition { parts }
    }

    /// Lexicographic combination successor over cut values {0, ..., k-2}.
    fn next_cuts(&mut self) -> bool {
        let m = self.cuts.len();
        if m == 0 {
            return false; // single composition (k) when n = 1
        }
        let top = self.k - 2; // largest admissible cut value
        let mut i = m;
        while i > 0 {
            i -= 1;
            // Position i may rise as long as the tail still fits above it.
            if self.cuts[i] < top - (m as u64 - 1 - i as u64) {
                self.cuts[i] += 1;
                for j in i + 1..m {
                    self.cuts[j] = self.cuts[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        if self.next_cuts() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}
