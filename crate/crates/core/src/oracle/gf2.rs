use std::fmt;

/// Dense matrix over GF(2), one bit per entry, rows packed into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

pub(crate) fn words_for(cols: usize) -> usize {
    cols.div_ceil(64)
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = words_for(cols);
        BinaryMatrix {
            rows,
            cols,
            words,
            bits: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds from rows of 0/1 entries; any odd value counts as one.
    pub fn from_rows<R: AsRef<[u8]>>(cols: usize, rows: &[R]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.as_ref().iter().enumerate().take(cols) {
                m.set(i, j, v % 2 == 1);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols);
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols);
        let word = &mut self.bits[i * self.words + j / 64];
        let mask = 1u64 << (j % 64);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    /// Adds one to entry `(i, j)` mod 2.
    pub fn toggle(&mut self, i: usize, j: usize) {
        assert!(i < self.rows && j < self.cols);
        self.bits[i * self.words + j / 64] ^= 1u64 << (j % 64);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// `self · otherᵀ` over GF(2).
    pub fn mul_transpose(&self, other: &BinaryMatrix) -> BinaryMatrix {
        assert_eq!(self.cols, other.cols);
        let mut out = BinaryMatrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                let dot = self
                    .row(i)
                    .iter()
                    .zip(other.row(j))
                    .map(|(a, b)| (a & b).count_ones())
                    .sum::<u32>();
                if dot % 2 == 1 {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    /// Parity of the overlap between row `i` and `v`.
    pub fn row_dot(&self, i: usize, v: &[u64]) -> bool {
        self.row(i)
            .iter()
            .zip(v)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// Whether `v` lies in the kernel.
    pub fn annihilates(&self, v: &[u64]) -> bool {
        (0..self.rows).all(|i| !self.row_dot(i, v))
    }

    pub fn rank(&self) -> usize {
        RowSpace::new(self).dim()
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: String = (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '.' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Row space of a binary matrix in reduced echelon form, for rank and
/// membership queries.
#[derive(Debug, Clone)]
pub struct RowSpace {
    words: usize,
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

fn bit(v: &[u64], j: usize) -> bool {
    v[j / 64] >> (j % 64) & 1 == 1
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn lowest_set_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

impl RowSpace {
    pub fn new(m: &BinaryMatrix) -> Self {
        let mut space = RowSpace {
            words: m.words,
            basis: Vec::new(),
            pivots: Vec::new(),
        };
        for i in 0..m.rows {
            space.insert(m.row(i).to_vec());
        }
        space
    }

    /// Adds a vector; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let Some(pivot) = lowest_set_bit(&v) else { return false };
        for row in &mut self.basis {
            if bit(row, pivot) {
                xor_into(row, &v);
            }
        }
        self.basis.push(v);
        self.pivots.push(pivot);
        true
    }

    /// Reduces `v` modulo the space in place.
    pub fn reduce(&self, v: &mut [u64]) {
        debug_assert_eq!(v.len(), self.words);
        for (row, &pivot) in self.basis.iter().zip(&self.pivots) {
            if bit(v, pivot) {
                xor_into(v, row);
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Rank over GF(2).
pub fn gf2_rank(m: &BinaryMatrix) -> usize {
    m.rank()
}
