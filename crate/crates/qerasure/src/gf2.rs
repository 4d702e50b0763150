//! Bit-packed linear algebra over GF(2): vectors and matrices with rows
//! packed into u64 words, Gaussian elimination, rank, row-space membership
//! and null-space bases. Sized for block lengths up to a few thousand.

use rand::Rng;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// A bit vector over GF(2), packed least-significant-bit first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GF2Vector {
    len: usize,
    words: Vec<u64>,
}

impl GF2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Uniform random vector of the given length.
    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        let mut words = vec![0u64; words_for(len)];
        for w in words.iter_mut() {
            *w = rng.next_u64();
        }
        let mut v = Self { len, words };
        v.mask_tail();
        v
    }

    fn mask_tail(&mut self) {
        let extra = self.words.len() * 64 - self.len;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product over GF(2): parity of the AND.
    pub fn dot(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    /// Index of the lowest set bit, if any.
    pub fn leading_bit(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// New vector with the listed coordinates, in order.
    pub fn select(&self, coords: &[usize]) -> GF2Vector {
        let mut out = GF2Vector::zeros(coords.len());
        for (k, &i) in coords.iter().enumerate() {
            if self.get(i) {
                out.set(k, true);
            }
        }
        out
    }
}

/// A matrix over GF(2) held as bit-packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GF2Vector>,
}

impl GF2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![GF2Vector::zeros(cols); rows],
        }
    }

    pub fn from_rows(rows: Vec<GF2Vector>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols));
        Self {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &GF2Vector {
        &self.data[i]
    }

    pub fn rows(&self) -> &[GF2Vector] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    pub fn push_row(&mut self, row: GF2Vector) {
        assert_eq!(row.len(), self.cols);
        self.data.push(row);
        self.rows += 1;
    }

    /// Submatrix of the listed columns, preserving row order.
    pub fn select_columns(&self, coords: &[usize]) -> GF2Matrix {
        GF2Matrix {
            rows: self.rows,
            cols: coords.len(),
            data: self.data.iter().map(|r| r.select(coords)).collect(),
        }
    }

    /// Rank by in-place elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate();
        m.data.iter().filter(|r| !r.is_zero()).count()
    }

    /// Row-reduce in place (row echelon, pivots cleared above and below).
    pub fn eliminate(&mut self) {
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            let Some(found) = (pivot_row..self.rows).find(|&r| self.data[r].get(col)) else {
                continue;
            };
            self.data.swap(pivot_row, found);
            let pivot = self.data[pivot_row].clone();
            for (r, row) in self.data.iter_mut().enumerate() {
                if r != pivot_row && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivot_row += 1;
        }
    }

    /// True iff `v` lies in the row space.
    pub fn row_space_contains(&self, v: &GF2Vector) -> bool {
        assert_eq!(v.len(), self.cols);
        let rank = self.rank();
        let mut extended = self.clone();
        extended.push_row(v.clone());
        extended.rank() == rank
    }
}

/// Incremental independent-set tracker: rows are kept reduced so membership
/// tests are a single reduction pass.
#[derive(Clone, Debug)]
pub struct RowBasis {
    cols: usize,
    /// reduced rows, each with a distinct leading bit
    rows: Vec<GF2Vector>,
}

impl RowBasis {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduce `v` against the basis; returns the residue.
    fn reduce(&self, v: &GF2Vector) -> GF2Vector {
        let mut r = v.clone();
        for row in &self.rows {
            let lead = row.leading_bit().expect("basis rows are nonzero");
            if r.get(lead) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &GF2Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert `v` if independent of the current rows. Returns false if `v`
    /// reduced to zero.
    pub fn insert(&mut self, v: &GF2Vector) -> bool {
        assert_eq!(v.len(), self.cols);
        let r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        self.rows.push(r);
        // keep rows sorted by leading bit so reduction stays one pass
        self.rows
            .sort_by_key(|row| row.leading_bit().expect("nonzero"));
        true
    }
}
