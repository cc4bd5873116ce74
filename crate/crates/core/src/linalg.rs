//! Matrix rank over prime fields.
//!
//! GF(2) rows are packed 64 columns per word and reduced with word-wide XOR.
//! Other primes use dense rows of residues.

/// Row-major matrix over GF(2) with bit-packed rows.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix {
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn rows(&self) -> usize {
        self.data.len() / self.words
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn flip(&mut self, row: usize, col: usize) {
        debug_assert!(col < self.cols);
        self.data[row * self.words + col / 64] ^= 1 << (col % 64);
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.data[row * self.words + col / 64] >> (col % 64) & 1 == 1
    }

    /// Rank by incremental reduction against pivots keyed on their lowest column.
    pub fn rank(mut self) -> usize {
        let w = self.words;
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; self.cols];
        let mut rank = 0;
        for r in 0..self.rows() {
            loop {
                let row = &self.data[r * w..(r + 1) * w];
                let Some(lead) = lowest_bit(row) else { break };
                match pivot_of_col[lead] {
                    Some(p) => {
                        let (head, tail) = self.data.split_at_mut(r * w);
                        let pivot = &head[p * w..(p + 1) * w];
                        // pivot has no bits below `lead`, so only later words change
                        let start = lead / 64;
                        for (dst, src) in tail[start..w].iter_mut().zip(&pivot[start..]) {
                            *dst ^= *src;
                        }
                    }
                    None => {
                        pivot_of_col[lead] = Some(r);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }
}

fn lowest_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Dense row-major matrix over GF(p), entries stored as residues `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        ModMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u64) {
        self.data[row * self.cols + col] = value % self.p;
    }

    /// `self * other` (self is `a x b`, other is `b x c`).
    pub fn mul(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = ModMatrix::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.get(i, j) + a * other.get(k, j)) % self.p;
                    out.data[i * other.cols + j] = v;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn rank(mut self) -> usize {
        let (p, cols) = (self.p, self.cols);
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
        let mut rank = 0;
        for r in 0..self.rows {
            loop {
                let Some(lead) = (0..cols).find(|&c| self.data[r * cols + c] != 0) else {
                    break;
                };
                match pivot_of_col[lead] {
                    Some(pr) => {
                        let factor = self.data[r * cols + lead];
                        for c in lead..cols {
                            let sub = factor * self.data[pr * cols + c] % p;
                            let cell = &mut self.data[r * cols + c];
                            *cell = (*cell + p - sub) % p;
                        }
                    }
                    None => {
                        let inv = mod_inverse(self.data[r * cols + lead], p);
                        for c in lead..cols {
                            let cell = &mut self.data[r * cols + c];
                            *cell = *cell * inv % p;
                        }
                        pivot_of_col[lead] = Some(r);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) = a^-1
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}
