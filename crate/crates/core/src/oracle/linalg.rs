//! Exact ranks of integer matrices with entries in `{-1, 0, 1}`.
//!
//! Over the rationals the elimination stays in the integers. Each step
//! replaces a row by an integer combination with the pivot row and divides
//! out the row content, so entries stay small in practice. Arithmetic is
//! checked `i64` and falls back to arbitrary precision on overflow.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Field;

/// A sparse matrix whose rows list `(column, ±1)` pairs.
#[derive(Clone, Debug, Default)]
pub(crate) struct SignMatrix {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, i8)>>,
}

impl SignMatrix {
    pub fn new(cols: usize) -> Self {
        SignMatrix {
            cols,
            rows: Vec::new(),
        }
    }
}

pub(crate) fn rank(m: &SignMatrix, field: Field) -> usize {
    if m.rows.is_empty() || m.cols == 0 {
        return 0;
    }
    match field {
        Field::Gf2 => rank_gf2(m),
        Field::Prime(p) => rank_mod_p(m, u64::from(p)),
        Field::Rationals => rank_rational(m),
    }
}

fn rank_gf2(m: &SignMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = m
        .rows
        .iter()
        .map(|r| {
            let mut bits = vec![0u64; words];
            for &(c, _) in r {
                bits[c / 64] ^= 1 << (c % 64);
            }
            bits
        })
        .collect();
    let mut rank = 0;
    for col in 0..m.cols {
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut().filter(|row| row[w] & b != 0) {
            for (x, y) in row[w..].iter_mut().zip(&pivot[w..]) {
                *x ^= y;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let (mut result, mut base, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn rank_mod_p(m: &SignMatrix, p: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = m
        .rows
        .iter()
        .map(|r| {
            let mut dense = vec![0u64; m.cols];
            for &(c, s) in r {
                let v = if s > 0 { 1 } else { p - 1 };
                dense[c] = (dense[c] + v) % p;
            }
            dense
        })
        .collect();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(pr) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = inverse_mod(rows[rank][col], p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let factor = row[col] * inv % p;
            for (x, y) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x = (*x + p - factor * y % p) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn rank_rational(m: &SignMatrix) -> usize {
    let rows: Vec<Vec<i64>> = m
        .rows
        .iter()
        .map(|r| {
            let mut dense = vec![0i64; m.cols];
            for &(c, s) in r {
                dense[c] += i64::from(s);
            }
            dense
        })
        .collect();
    match rank_integer_checked(rows) {
        Ok(r) => r,
        Err(rows) => rank_integer_big(rows),
    }
}

/// Integer elimination in `i64`. On overflow the untouched original rows
/// are handed back for the arbitrary-precision path.
fn rank_integer_checked(original: Vec<Vec<i64>>) -> Result<usize, Vec<Vec<i64>>> {
    let mut rows = original.clone();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let pick = (rank..rows.len())
            .filter(|&r| rows[r][col] != 0)
            .min_by_key(|&r| rows[r][col].unsigned_abs());
        let Some(pr) = pick else { continue };
        rows.swap(rank, pr);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let g = pivot[col].gcd(&row[col]);
            let (a, b) = (pivot[col] / g, row[col] / g);
            let mut content = 0i64;
            for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                let v = a
                    .checked_mul(*x)
                    .zip(b.checked_mul(y))
                    .and_then(|(l, r)| l.checked_sub(r));
                let Some(v) = v else { return Err(original) };
                *x = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                for x in row[col..].iter_mut() {
                    *x /= content;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}

fn rank_integer_big(original: Vec<Vec<i64>>) -> usize {
    let mut rows: Vec<Vec<BigInt>> = original
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let pick = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by(|&r, &s| rows[r][col].abs().cmp(&rows[s][col].abs()));
        let Some(pr) = pick else { continue };
        rows.swap(rank, pr);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = pivot[col].gcd(&row[col]);
            let a = &pivot[col] / &g;
            let b = &row[col] / &g;
            let mut content = BigInt::zero();
            for (x, y) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x = &a * &*x - &b * y;
                content = content.gcd(x);
            }
            if content > BigInt::from(1) {
                for x in row[col..].iter_mut() {
                    *x = &*x / &content;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
