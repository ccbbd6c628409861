//! Brute-force isomorphism testing and the group test.

use crate::error::{Error, Result};
use crate::gyrogroup::FiniteGyrogroup;
use crate::perm::Permutation;

/// Per-element data preserved by every isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Fingerprint {
    /// Length of `x, x ⊕ x, x ⊕ (x ⊕ x), ..` until it reaches 0; 0 if it
    /// never does.
    left_order: usize,
    /// `#{y : gyr[x, y] != I}` and `#{y : gyr[y, x] != I}`.
    nontrivial_left: usize,
    nontrivial_right: usize,
    /// `x ⊕ x == 0`, `x ⊕ x == x`
    squares_to_identity: bool,
}

fn fingerprints(g: &FiniteGyrogroup) -> Vec<Fingerprint> {
    let n = g.order();
    let trivial: Vec<bool> = g.perms().iter().map(Permutation::is_identity).collect();
    (0..n)
        .map(|x| {
            let mut power = x;
            let mut left_order = 0;
            for k in 1..=n {
                if power == 0 {
                    left_order = k;
                    break;
                }
                power = g.op(x, power);
            }
            Fingerprint {
                left_order,
                nontrivial_left: (0..n).filter(|&y| !trivial[g.gyr_index(x, y)]).count(),
                nontrivial_right: (0..n).filter(|&y| !trivial[g.gyr_index(y, x)]).count(),
                squares_to_identity: g.op(x, x) == 0,
            }
        })
        .collect()
}

/// Elements whose `⊕`-closure together with 0 is everything, chosen
/// greedily in increasing order.
fn generating_sequence(g: &FiniteGyrogroup) -> Vec<usize> {
    let n = g.order();
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut members = vec![0];
    let mut gens = Vec::new();
    while members.len() < n {
        let x = (0..n)
            .find(|&x| !inside[x])
            .expect("some element is missing");
        gens.push(x);
        inside[x] = true;
        members.push(x);
        let mut i = 0;
        while i < members.len() {
            for j in 0..=i {
                for y in [g.op(members[i], members[j]), g.op(members[j], members[i])] {
                    if !std::mem::replace(&mut inside[y], true) {
                        members.push(y);
                    }
                }
            }
            i += 1;
        }
    }
    gens
}

/// Extends the generator images to a full map, `None` on any clash.
fn extend(
    g: &FiniteGyrogroup,
    h: &FiniteGyrogroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = g.order();
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    phi[0] = 0;
    used[0] = true;
    let mut known = vec![0];
    for (&x, &y) in gens.iter().zip(images) {
        if phi[x] != usize::MAX {
            if phi[x] != y {
                return None;
            }
            continue;
        }
        if used[y] {
            return None;
        }
        phi[x] = y;
        used[y] = true;
        known.push(x);
    }
    let mut i = 0;
    while i < known.len() {
        for j in 0..=i {
            let (a, b) = (known[i], known[j]);
            for (u, v) in [(a, b), (b, a)] {
                let c = g.op(u, v);
                let image = h.op(phi[u], phi[v]);
                if phi[c] == usize::MAX {
                    if used[image] {
                        return None;
                    }
                    phi[c] = image;
                    used[image] = true;
                    known.push(c);
                } else if phi[c] != image {
                    return None;
                }
            }
        }
        i += 1;
    }
    (known.len() == n).then_some(phi)
}

fn is_isomorphism(g: &FiniteGyrogroup, h: &FiniteGyrogroup, phi: &[usize]) -> bool {
    let n = g.order();
    (0..n).all(|a| (0..n).all(|b| phi[g.op(a, b)] == h.op(phi[a], phi[b])))
}

/// A bijection `φ: G -> H` with `φ(a ⊕ b) = φ(a) ⊕ φ(b)`, if one exists.
///
/// Generator images are searched by backtracking, restricted to elements of
/// `H` with the same fingerprint; every candidate map is checked on all
/// pairs before it is returned.
pub fn isomorphic(g: &FiniteGyrogroup, h: &FiniteGyrogroup) -> Option<Permutation> {
    if g.order() != h.order() {
        return None;
    }
    let (fg, fh) = (fingerprints(g), fingerprints(h));
    let (mut sg, mut sh) = (fg.clone(), fh.clone());
    sg.sort();
    sh.sort();
    if sg != sh {
        return None;
    }
    let gens = generating_sequence(g);
    let options: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| (0..h.order()).filter(|&y| fh[y] == fg[x]).collect())
        .collect();

    let mut images = Vec::with_capacity(gens.len());
    search(g, h, &gens, &options, &mut images)
        .map(|phi| Permutation::from_images(phi).expect("extension is injective"))
}

fn search(
    g: &FiniteGyrogroup,
    h: &FiniteGyrogroup,
    gens: &[usize],
    options: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let depth = images.len();
    if depth == gens.len() {
        return extend(g, h, gens, images).filter(|phi| is_isomorphism(g, h, phi));
    }
    for &y in &options[depth] {
        if images.contains(&y) {
            continue;
        }
        images.push(y);
        if let Some(phi) = search(g, h, gens, options, images) {
            return Some(phi);
        }
        images.pop();
    }
    None
}

/// Whether `g` is a group: every gyration is the identity, and `⊕` is
/// associative. The two must agree; a disagreement means the tables are
/// corrupt.
pub fn is_degenerate_group(g: &FiniteGyrogroup) -> Result<bool> {
    let trivial = g.perms().iter().all(Permutation::is_identity);
    let n = g.order();
    let associative = (0..n).all(|a| {
        (0..n).all(|b| {
            let ab = g.op(a, b);
            (0..n).all(|c| g.op(ab, c) == g.op(a, g.op(b, c)))
        })
    });
    if trivial == associative {
        Ok(trivial)
    } else {
        Err(Error::Inconsistent(format!(
            "gyrations are {} but the operation is {}",
            if trivial {
                "all trivial"
            } else {
                "not all trivial"
            },
            if associative {
                "associative"
            } else {
                "not associative"
            },
        )))
    }
}
