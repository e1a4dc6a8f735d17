//! Small dense exact-rational linear algebra.

use num_rational::Ratio;

pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// Inverse of a square rational matrix, `None` when singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { q(1) } else { q(0) }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != q(0))?;
        a.swap(col, pivot);
        let inv = q(1) / a[col][col];
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && a[r][col] != q(0) {
                let f = a[r][col];
                for c in 0..2 * n {
                    let sub = f * a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn is_integral(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Renders a rational as `num/den`, always with an explicit denominator.
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: i64 = d.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Q::new(n.trim().parse().ok()?, d))
        }
        None => s.parse().ok().map(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_a2_gram() {
        let g = vec![vec![q(2), q(-1)], vec![q(-1), q(2)]];
        let inv = inverse(&g).unwrap();
        assert_eq!(inv[0][0], Q::new(2, 3));
        assert_eq!(inv[0][1], Q::new(1, 3));
        let id = (0..2)
            .map(|i| (0..2).map(|j| (0..2).map(|k| g[i][k] * inv[k][j]).sum::<Q>()).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        assert_eq!(id, vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(inverse(&m).is_none());
    }

    #[test]
    fn rational_text_round_trip() {
        for x in [Q::new(-7, 3), q(0), q(5), Q::new(1, 2)] {
            assert_eq!(parse_q(&format_q(&x)), Some(x));
        }
        assert_eq!(format_q(&q(-1)), "-1/1");
        assert_eq!(parse_q("3/0"), None);
    }
}
