//! Brute-force reference checks for the lattice algorithms, kept on
//! naive i128 fraction arithmetic so they share no code path with the
//! normal-form implementations they cross-check.

use num::bigint::BigInt;

use crate::lattice::IntMatrix;

fn small_rows(m: &IntMatrix) -> Vec<Vec<i128>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| i128::try_from(x).expect("oracle entries must fit i128"))
                .collect()
        })
        .collect()
}

/// Summand test by box enumeration: the row lattice is a direct summand
/// iff every integer point of the rational row span inside the box is an
/// integral combination of the rows. Intended for at most 3 columns.
pub fn brute_force_is_summand(m: &IntMatrix, box_bound: i64) -> bool {
    let rows = small_rows(m);
    let cols = m.cols();
    assert!(cols <= 3, "box enumeration is only feasible for <= 3 columns");
    let mut point = vec![-box_bound; cols];
    loop {
        let v: Vec<i128> = point.iter().map(|&x| x as i128).collect();
        if in_rational_span(&rows, &v) && !in_lattice(&rows, &v) {
            return false;
        }
        let mut i = 0;
        loop {
            if i == cols {
                return true;
            }
            point[i] += 1;
            if point[i] <= box_bound {
                break;
            }
            point[i] = -box_bound;
            i += 1;
        }
    }
}

/// Membership of `v` in the integral row lattice of `m`, by a naive
/// gcd-based sweep.
pub fn lattice_contains(m: &IntMatrix, v: &[BigInt]) -> bool {
    let rows = small_rows(m);
    let vv: Vec<i128> = v
        .iter()
        .map(|x| i128::try_from(x).expect("oracle entries must fit i128"))
        .collect();
    in_lattice(&rows, &vv)
}

fn frac_norm(a: (i128, i128)) -> (i128, i128) {
    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    if a.0 == 0 {
        return (0, 1);
    }
    let g = gcd(a.0, a.1);
    let s = if a.1 < 0 { -1 } else { 1 };
    (s * a.0 / g, s * a.1 / g)
}

fn frac_sub_mul(a: (i128, i128), f: (i128, i128), b: (i128, i128)) -> (i128, i128) {
    // a - f*b
    let num = a.0 * f.1 * b.1 - f.0 * b.0 * a.1;
    let den = a.1 * f.1 * b.1;
    frac_norm((num, den))
}

/// Reduces `row` against an echelonized basis; returns the normalized
/// nonzero remainder or None if the row reduces to zero.
fn reduce_against(
    basis: &[Vec<(i128, i128)>],
    mut row: Vec<(i128, i128)>,
) -> Option<Vec<(i128, i128)>> {
    for b in basis {
        let lead = b.iter().position(|&x| x.0 != 0).unwrap();
        if row[lead].0 != 0 {
            let f = frac_norm((row[lead].0 * b[lead].1, row[lead].1 * b[lead].0));
            for j in 0..row.len() {
                row[j] = frac_sub_mul(row[j], f, b[j]);
            }
        }
    }
    let lead = row.iter().position(|&x| x.0 != 0)?;
    let inv = (row[lead].1, row[lead].0);
    for j in 0..row.len() {
        row[j] = frac_norm((row[j].0 * inv.0, row[j].1 * inv.1));
    }
    Some(row)
}

fn in_rational_span(rows: &[Vec<i128>], v: &[i128]) -> bool {
    let mut basis: Vec<Vec<(i128, i128)>> = Vec::new();
    for row in rows {
        let frac: Vec<(i128, i128)> = row.iter().map(|&x| (x, 1)).collect();
        if let Some(reduced) = reduce_against(&basis, frac) {
            basis.push(reduced);
        }
    }
    reduce_against(&basis, v.iter().map(|&x| (x, 1)).collect()).is_none()
}

fn in_lattice(rows: &[Vec<i128>], v: &[i128]) -> bool {
    let cols = v.len();
    let mut work: Vec<Vec<i128>> = rows.to_vec();
    let mut target = v.to_vec();
    let mut r = 0;
    for c in 0..cols {
        loop {
            let pivot = (r..work.len())
                .filter(|&i| work[i][c] != 0)
                .min_by_key(|&i| work[i][c].abs());
            let Some(p) = pivot else { break };
            work.swap(r, p);
            let mut left = false;
            for i in r + 1..work.len() {
                if work[i][c] != 0 {
                    let q = work[i][c].div_euclid(work[r][c]);
                    for j in 0..cols {
                        work[i][j] -= q * work[r][j];
                    }
                    left |= work[i][c] != 0;
                }
            }
            if !left {
                break;
            }
        }
        if r < work.len() && work[r][c] != 0 {
            if target[c] % work[r][c] != 0 {
                return false;
            }
            let q = target[c] / work[r][c];
            for j in 0..cols {
                target[j] -= q * work[r][j];
            }
            r += 1;
        } else if target[c] != 0 {
            return false;
        }
    }
    target.iter().all(|&x| x == 0)
}
