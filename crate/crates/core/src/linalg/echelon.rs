use super::field::PrimeField;

/// Incrementally maintained reduced row-echelon basis.
///
/// Every stored row has a leading 1 at its pivot and is zero at the
/// pivots of all other rows, so reducing a vector needs one pass with
/// coefficients read off the vector up front.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    len: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: PrimeField, len: usize) -> Self {
        Self { field, len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    /// Reduces `v` modulo the stored span in place; the result is canonical.
    pub fn reduce(&self, v: &mut [u64]) {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let p = self.field.p();
        let budget = self.field.lazy_budget();
        let mut pending = 0;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            // other rows vanish at `piv`, so v[piv] is still unmodified
            let c = v[piv] % p;
            if c == 0 {
                continue;
            }
            let c = p - c;
            for (x, &y) in v.iter_mut().zip(row) {
                *x += c * y;
            }
            pending += 1;
            if pending >= budget {
                v.iter_mut().for_each(|x| *x %= p);
                pending = 0;
            }
        }
        v.iter_mut().for_each(|x| *x %= p);
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Inserts `v`; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(v[piv]);
        v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        for row in &mut self.rows {
            let c = row[piv];
            if c == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&v) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        self.rows.push(v);
        self.pivots.push(piv);
        true
    }

    /// Basis rows sorted by pivot, with their pivots.
    pub fn sorted_rows(&self) -> (Vec<Vec<u64>>, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let rows = order.iter().map(|&i| self.rows[i].clone()).collect();
        let pivots = order.iter().map(|&i| self.pivots[i]).collect();
        (rows, pivots)
    }
}
