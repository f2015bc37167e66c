//! Exact rank of sparse integer matrices over Q (fraction-free) or GF(p).

use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::Field;

/// Sparse row: `(column, value)` pairs sorted by column, no zero values.
pub(crate) type SparseRow = Vec<(u32, i64)>;

pub(crate) fn rank(rows: Vec<SparseRow>, field: Field) -> Result<usize> {
    match field {
        Field::Rational => rank_rational(rows),
        Field::Prime(p) => Ok(rank_mod_p(rows, p as u64)),
    }
}

fn overflow() -> Error {
    Error::Capacity("integer overflow during fraction-free elimination".into())
}

fn rank_rational(rows: Vec<SparseRow>) -> Result<usize> {
    let mut pivots: HashMap<u32, SparseRow> = HashMap::new();
    for mut row in rows {
        while let Some(&(lead, value)) = row.first() {
            let Some(pivot) = pivots.get(&lead) else {
                normalize(&mut row);
                pivots.insert(lead, row);
                break;
            };
            let pv = pivot[0].1;
            let g = pv.gcd(&value);
            row = combine(&row, pv / g, pivot, value / g)?;
        }
    }
    Ok(pivots.len())
}

/// `a * x - b * y`, dropping zeros.
fn combine(x: &SparseRow, a: i64, y: &SparseRow, b: i64) -> Result<SparseRow> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (col, v) = if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            let r = (x[i].0, x[i].1.checked_mul(a).ok_or_else(overflow)?);
            i += 1;
            r
        } else if i == x.len() || y[j].0 < x[i].0 {
            let r = (y[j].0, y[j].1.checked_mul(-b).ok_or_else(overflow)?);
            j += 1;
            r
        } else {
            let l = x[i].1.checked_mul(a).ok_or_else(overflow)?;
            let r = y[j].1.checked_mul(b).ok_or_else(overflow)?;
            let c = (x[i].0, l.checked_sub(r).ok_or_else(overflow)?);
            i += 1;
            j += 1;
            c
        };
        if v != 0 {
            out.push((col, v));
        }
    }
    normalize(&mut out);
    Ok(out)
}

/// Divides by the content and makes the leading entry positive.
fn normalize(row: &mut SparseRow) {
    let g = row.iter().fold(0i64, |g, &(_, v)| g.gcd(&v));
    if g == 0 {
        return;
    }
    let g = if row[0].1 < 0 { -g } else { g };
    if g != 1 {
        for e in row.iter_mut() {
            e.1 /= g;
        }
    }
}

fn rank_mod_p(rows: Vec<SparseRow>, p: u64) -> usize {
    let reduce = |v: i64| v.rem_euclid(p as i64) as u64;
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for row in rows {
        let mut row: Vec<(u32, u64)> = row
            .into_iter()
            .map(|(c, v)| (c, reduce(v)))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(lead, value)) = row.first() {
            let Some(pivot) = pivots.get(&lead) else {
                let inv = mod_inverse(value, p);
                for e in row.iter_mut() {
                    e.1 = e.1 * inv % p;
                }
                pivots.insert(lead, row);
                break;
            };
            // pivot is monic: row -= value * pivot
            let mut out = Vec::with_capacity(row.len() + pivot.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < pivot.len() {
                let (col, v) = if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
                    i += 1;
                    row[i - 1]
                } else if i == row.len() || pivot[j].0 < row[i].0 {
                    j += 1;
                    (pivot[j - 1].0, (p - value * pivot[j - 1].1 % p) % p)
                } else {
                    let v = (row[i].1 + p - value * pivot[j].1 % p) % p;
                    i += 1;
                    j += 1;
                    (row[i - 1].0, v)
                };
                if v != 0 {
                    out.push((col, v));
                }
            }
            row = out;
        }
    }
    pivots.len()
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
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

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Vec<SparseRow> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(c, &v)| (c as u32, v))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn ranks_over_q() {
        assert_eq!(rank(dense(&[&[1, 2], &[2, 4]]), Field::Rational).unwrap(), 1);
        assert_eq!(rank(dense(&[&[1, 2], &[3, 4]]), Field::Rational).unwrap(), 2);
        assert_eq!(rank(dense(&[&[0, 0], &[0, 0]]), Field::Rational).unwrap(), 0);
        assert_eq!(
            rank(dense(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, -1]]), Field::Rational).unwrap(),
            2
        );
    }

    #[test]
    fn characteristic_matters() {
        // determinant 2
        let m = dense(&[&[1, 1], &[1, -1]]);
        assert_eq!(rank(m.clone(), Field::Rational).unwrap(), 2);
        assert_eq!(rank(m.clone(), Field::Prime(2)).unwrap(), 1);
        assert_eq!(rank(m, Field::Prime(3)).unwrap(), 2);
    }
}
