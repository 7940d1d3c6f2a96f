use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

/// Square integer matrix; size 0 stands for the unknot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SeifertMatrix {
    size: usize,
    entries: Vec<BigInt>,
}

impl SeifertMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let size = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::InvalidParameter(format!("row of length {} in a {size}x{size} matrix", r.len())));
        }
        Ok(SeifertMatrix { size, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_rows<const N: usize>(rows: [[i64; N]; N]) -> Self {
        SeifertMatrix { size: N, entries: rows.iter().flatten().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn unknot() -> Self {
        Self::default()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.size.max(1)).take(self.size).map(<[BigInt]>::to_vec).collect()
    }

    /// `P^T S P`, the Seifert matrix in another basis when `P` is unimodular.
    pub fn congruent(&self, p: &[Vec<BigInt>]) -> Result<Self> {
        let n = self.size;
        if p.len() != n || p.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter("change of basis has the wrong shape".into()));
        }
        let mut sp = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in sp.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..n).map(|k| self.get(i, k) * &p[k][j]).sum();
            }
        }
        let mut out = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..n).map(|k| &p[k][i] * &sp[k][j]).sum();
            }
        }
        Self::new(out)
    }

    /// Reads `n` on the first line, then `n` rows of `n` integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing matrix size".into() })?;
        let size: usize = first
            .parse()
            .map_err(|_| Error::Parse { line, msg: format!("bad matrix size {first:?}") })?;
        let mut rows = Vec::with_capacity(size);
        for (line, l) in lines {
            if rows.len() == size {
                return Err(Error::Parse { line, msg: "more rows than the declared size".into() });
            }
            let row: Vec<BigInt> = l
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse { line, msg: format!("bad integer {t:?}") }))
                .collect::<Result<_>>()?;
            if row.len() != size {
                return Err(Error::Parse { line, msg: format!("expected {size} entries, got {}", row.len()) });
            }
            rows.push(row);
        }
        if rows.len() != size {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                msg: format!("expected {size} rows, got {}", rows.len()),
            });
        }
        Self::new(rows)
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.size)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Seifert matrix of `T(2, n)`: `-1` on the diagonal, `+1` just above it.
pub fn seifert_torus2(n: i64) -> Result<SeifertMatrix> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!("T(2,n) needs odd n >= 3, got {n}")));
    }
    let size = (n - 1) as usize;
    let rows = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    BigInt::from(match j as i64 - i as i64 {
                        0 => -1,
                        1 => 1,
                        _ => 0,
                    })
                })
                .collect()
        })
        .collect();
    SeifertMatrix::new(rows)
}
