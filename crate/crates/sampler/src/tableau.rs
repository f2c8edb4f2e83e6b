use groth_core::Partition;

/// Semistandard Young tableau over the letters `1..=n`, stored row by row.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tableau {
    n: u32,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(n: u32) -> Self {
        Self { n, rows: Vec::new() }
    }

    pub fn alphabet(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u64).collect()).expect("rows shrink downward")
    }

    /// Row `j` length, 1-based; 0 past the last row.
    pub fn row_len(&self, j: usize) -> u64 {
        self.rows.get(j - 1).map_or(0, |r| r.len() as u64)
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]) && r.iter().all(|&v| (1..=self.n).contains(&v)));
        let cols_ok = self.rows.windows(2).all(|p| p[1].len() <= p[0].len() && p[1].iter().zip(&p[0]).all(|(lo, hi)| lo > hi));
        rows_ok && cols_ok
    }

    /// Schensted row insertion: the letter bumps the leftmost entry strictly greater than it.
    pub fn insert(&mut self, letter: u32) {
        let mut v = letter;
        for row in self.rows.iter_mut() {
            let pos = row.partition_point(|&e| e <= v);
            if pos == row.len() {
                row.push(v);
                return;
            }
            v = std::mem::replace(&mut row[pos], v);
        }
        self.rows.push(vec![v]);
    }
}

/// Inserts `1^{c_1} 2^{c_2} … n^{c_n}`; the shape grows by a horizontal strip.
pub fn rsk_insert_word(t: &mut Tableau, counts: &[u64]) {
    for (i, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            t.insert(i as u32 + 1);
        }
    }
}

/// Dual insertion of the letters `{j : b_j = 1}`. They are row-inserted in decreasing order, so
/// each new box lands strictly below the previous one and the shape grows by a vertical strip.
pub fn dual_rsk_insert_word(t: &mut Tableau, bits: &[bool]) {
    for (i, _) in bits.iter().enumerate().rev().filter(|(_, b)| **b) {
        t.insert(i as u32 + 1);
    }
}
