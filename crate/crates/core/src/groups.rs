//! Small reference groups, encoded as gyrogroups with trivial gyrations.

use crate::gyrogroup::FiniteGyrogroup;

/// Cayley table of a finite group given by its multiplication on `0..n`.
pub type GroupTable = Vec<Vec<usize>>;

pub fn cyclic_table(n: usize) -> GroupTable {
    (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect()
}

/// `G × H` with `(g, h)` encoded as `g * |H| + h`.
pub fn direct_product_table(g: &GroupTable, h: &GroupTable) -> GroupTable {
    let (ng, nh) = (g.len(), h.len());
    let mut out = vec![vec![0; ng * nh]; ng * nh];
    for (x, row) in out.iter_mut().enumerate() {
        for (y, v) in row.iter_mut().enumerate() {
            *v = g[x / nh][y / nh] * nh + h[x % nh][y % nh];
        }
    }
    out
}

/// `Z_n ⋊ Z_2` where the generator of `Z_2` acts by `a -> r·a`; requires
/// `r² ≡ 1 (mod n)`. Element `(a, b)` is encoded as `a + n·b`.
pub fn cyclic_by_two_table(n: usize, r: usize) -> GroupTable {
    assert_eq!(r * r % n, 1 % n, "r must be an involutive unit mod n");
    let act = |b: usize, a: usize| if b == 0 { a } else { a * r % n };
    let mut out = vec![vec![0; 2 * n]; 2 * n];
    for (x, row) in out.iter_mut().enumerate() {
        let (a1, b1) = (x % n, x / n);
        for (y, v) in row.iter_mut().enumerate() {
            let (a2, b2) = (y % n, y / n);
            *v = (a1 + act(b1, a2)) % n + n * ((b1 + b2) % 2);
        }
    }
    out
}

pub fn cyclic(n: usize) -> FiniteGyrogroup {
    FiniteGyrogroup::from_group_table(cyclic_table(n)).expect("cyclic group")
}

/// Dihedral group of order `2k`.
pub fn dihedral(k: usize) -> FiniteGyrogroup {
    FiniteGyrogroup::from_group_table(cyclic_by_two_table(k, k - 1)).expect("dihedral group")
}

/// Product of cyclic groups of the given orders.
pub fn abelian(orders: &[usize]) -> FiniteGyrogroup {
    let table = orders
        .iter()
        .map(|&n| cyclic_table(n))
        .reduce(|acc, t| direct_product_table(&acc, &t))
        .unwrap_or_else(|| cyclic_table(1));
    FiniteGyrogroup::from_group_table(table).expect("abelian group")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_associative(t: &GroupTable) -> bool {
        let n = t.len();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
    }

    #[test]
    fn tables_are_groups() {
        assert!(is_associative(&cyclic_by_two_table(8, 5)));
        assert!(is_associative(&cyclic_by_two_table(8, 3)));
        assert!(is_associative(&direct_product_table(
            &cyclic_table(2),
            &cyclic_table(4)
        )));
        assert_eq!(abelian(&[2, 2, 2]).order(), 8);
        assert_eq!(abelian(&[]).order(), 1);
    }

    #[test]
    fn dihedral_is_nonabelian() {
        let g = dihedral(4);
        assert!((0..8).any(|a| (0..8).any(|b| g.op(a, b) != g.op(b, a))));
    }
}
