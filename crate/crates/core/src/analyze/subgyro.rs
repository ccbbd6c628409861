//! Subgyrogroups: closure, brute-force enumeration, the inclusion lattice and
//! the closed-form family list for `G₂(n)`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::construct::CyclicParams;
use crate::error::Result;
use crate::gyrogroup::FiniteGyrogroup;

/// Which family of the `G₂(n)` classification a subgyrogroup belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedForm {
    /// `⟨2ˢ⟩ ≤ P(n)`, `0 <= s <= n-1` (`2^(n-1) ≡ 0`, the trivial subgroup).
    Pow2(u32),
    /// `⟨2ˢ, m⟩`, `0 <= s <= n-1`.
    Pow2M(u32),
    /// `⟨m + 2ˢ⟩`, `0 <= s <= n-2`.
    MPlusPow2(u32),
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::Pow2(s) => write!(f, "<2^{s}>"),
            ClosedForm::Pow2M(s) => write!(f, "<2^{s}, m>"),
            ClosedForm::MPlusPow2(s) => write!(f, "<m + 2^{s}>"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgyrogroup {
    /// Sorted, always contains 0.
    pub elements: Vec<usize>,
    /// A smallest generating set, lexicographically first among those of
    /// that size. Empty for the trivial subgyrogroup.
    pub generators: Vec<usize>,
    pub closed_form: Option<ClosedForm>,
    /// Every internal gyration restricts to the identity on `elements`.
    pub is_group: bool,
}

impl Subgyrogroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgyrogroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// `⟨5⟩`, `⟨2,4⟩`; `⟨0⟩` for the trivial subgyrogroup.
    pub fn label(&self) -> String {
        if self.generators.is_empty() {
            "⟨0⟩".to_string()
        } else {
            format!("⟨{}⟩", self.generators.iter().join(","))
        }
    }
}

/// Repeated closures over one gyrogroup, sharing its inverse map.
pub struct Closer<'g> {
    g: &'g FiniteGyrogroup,
    inverse: Vec<Option<usize>>,
}

impl<'g> Closer<'g> {
    pub fn new(g: &'g FiniteGyrogroup) -> Self {
        Closer {
            g,
            inverse: g.inverse_map(),
        }
    }

    /// Smallest subset containing `0` and `seed` that is closed under `⊕`,
    /// `⊖` and the gyrations `gyr[a, b]` with `a, b` inside it. Sorted.
    pub fn close(&self, seed: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let g = self.g;
        let mut member = vec![false; g.order()];
        let mut list = Vec::new();
        let mut perm_seen = vec![false; g.perms().len()];
        let mut perms: Vec<usize> = Vec::new();

        fn push(x: usize, member: &mut [bool], list: &mut Vec<usize>) {
            if !member[x] {
                member[x] = true;
                list.push(x);
            }
        }
        push(0, &mut member, &mut list);
        for x in seed {
            push(x, &mut member, &mut list);
        }

        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            if let Some(inv) = self.inverse[x] {
                push(inv, &mut member, &mut list);
            }
            for j in 0..=i {
                let y = list[j];
                push(g.op(x, y), &mut member, &mut list);
                push(g.op(y, x), &mut member, &mut list);
                for k in [g.gyr_index(x, y), g.gyr_index(y, x)] {
                    if !std::mem::replace(&mut perm_seen[k], true) {
                        perms.push(k);
                        // new gyration: apply to everything collected so far
                        let p = &g.perms()[k];
                        for idx in 0..list.len() {
                            let image = p.apply(list[idx]);
                            push(image, &mut member, &mut list);
                        }
                    }
                }
            }
            for &k in &perms {
                push(g.perms()[k].apply(x), &mut member, &mut list);
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    /// Whether every gyration `gyr[a, b]` with `a, b` in the (closed,
    /// sorted) `set` fixes `set` pointwise.
    pub fn internal_gyrations_trivial(&self, set: &[usize]) -> bool {
        let g = self.g;
        let mut checked = vec![false; g.perms().len()];
        set.iter().cartesian_product(set).all(|(&a, &b)| {
            let k = g.gyr_index(a, b);
            std::mem::replace(&mut checked[k], true)
                || set.iter().all(|&c| g.perms()[k].apply(c) == c)
        })
    }
}

/// The subgyrogroup generated by `gens`, with a canonical generating set.
pub fn closure(g: &FiniteGyrogroup, gens: &[usize]) -> Result<Subgyrogroup> {
    for &x in gens {
        g.check_element(x)?;
    }
    let closer = Closer::new(g);
    let elements = closer.close(gens.iter().copied());
    let generators = canonical_generators(&closer, &elements);
    let is_group = closer.internal_gyrations_trivial(&elements);
    Ok(Subgyrogroup {
        elements,
        generators,
        closed_form: None,
        is_group,
    })
}

/// Direct search for a smallest lexicographically-first generating set.
fn canonical_generators(closer: &Closer<'_>, elements: &[usize]) -> Vec<usize> {
    let candidates = &elements[1..];
    for size in 1..=candidates.len() {
        if let Some(gens) = candidates
            .iter()
            .copied()
            .combinations(size)
            .find(|gens| closer.close(gens.iter().copied()).len() == elements.len())
        {
            return gens;
        }
    }
    Vec::new()
}

/// Subgyrogroups ordered by `(order, elements)`, with the cover relation of
/// inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgyrogroupLattice {
    pub nodes: Vec<Subgyrogroup>,
    /// `(child, parent)` node indices with `child ⊂ parent` and nothing
    /// strictly between. Sorted.
    pub covers: Vec<(usize, usize)>,
}

impl SubgyrogroupLattice {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn bottom(&self) -> &Subgyrogroup {
        &self.nodes[0]
    }

    pub fn top(&self) -> &Subgyrogroup {
        self.nodes.last().expect("lattice has a top")
    }

    pub fn position(&self, elements: &[usize]) -> Option<usize> {
        self.nodes.iter().position(|s| s.elements == elements)
    }

    pub fn element_sets(&self) -> HashSet<Vec<usize>> {
        self.nodes.iter().map(|s| s.elements.clone()).collect()
    }

    /// Fills in [`Subgyrogroup::closed_form`] for nodes matching the
    /// classification of `G₂(n)`.
    pub fn annotate_closed_forms(&mut self, n: u32) -> Result<()> {
        let forms = classify_subgyrogroups(n)?;
        for node in &mut self.nodes {
            node.closed_form = forms
                .iter()
                .find(|f| f.elements == node.elements)
                .and_then(|f| f.closed_form);
        }
        Ok(())
    }
}

/// Every subgyrogroup of `g`, found by closing `S ∪ {x}` for every known `S`
/// and `x ∉ S` until nothing new appears.
pub fn enumerate_subgyrogroups(g: &FiniteGyrogroup) -> SubgyrogroupLattice {
    let closer = Closer::new(g);
    let n = g.order();

    let mut known: HashSet<Vec<usize>> = HashSet::new();
    let mut sets: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<Vec<usize>> = Vec::new();
    let singletons: Vec<Vec<usize>> = (0..n).into_par_iter().map(|x| closer.close([x])).collect();
    for s in singletons {
        if known.insert(s.clone()) {
            frontier.push(s);
        }
    }
    while !frontier.is_empty() {
        sets.extend(frontier.iter().cloned());
        let candidates: Vec<Vec<usize>> = frontier
            .par_iter()
            .flat_map_iter(|s| {
                let mut inside = vec![false; n];
                s.iter().for_each(|&x| inside[x] = true);
                (0..n)
                    .filter(move |&x| !inside[x])
                    .map(|x| closer.close(s.iter().copied().chain([x])))
                    .collect::<Vec<_>>()
            })
            .collect();
        frontier = candidates
            .into_iter()
            .filter(|c| known.insert(c.clone()))
            .collect();
    }
    sets.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    build_lattice(&closer, sets)
}

fn build_lattice(closer: &Closer<'_>, sets: Vec<Vec<usize>>) -> SubgyrogroupLattice {
    let n = closer.g.order();
    let k = sets.len();
    let masks: Vec<Vec<bool>> = sets
        .iter()
        .map(|s| {
            let mut m = vec![false; n];
            s.iter().for_each(|&x| m[x] = true);
            m
        })
        .collect();
    // includes[i][j]: sets[i] ⊆ sets[j]
    let includes: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| sets[i].iter().all(|&x| masks[j][x]))
                .collect()
        })
        .collect();

    let mut covers = Vec::new();
    for child in 0..k {
        for parent in 0..k {
            if child != parent
                && includes[child][parent]
                && !(0..k).any(|mid| {
                    mid != child && mid != parent && includes[child][mid] && includes[mid][parent]
                })
            {
                covers.push((child, parent));
            }
        }
    }

    // ⟨x⟩ for every x, as a node index; a set of generators generates the
    // smallest node containing all of their cyclic closures.
    let cyclic: Vec<usize> = {
        let index: HashMap<&[usize], usize> = sets
            .iter()
            .enumerate()
            .map(|(j, s)| (s.as_slice(), j))
            .collect();
        (0..n)
            .into_par_iter()
            .map(|x| index[closer.close([x]).as_slice()])
            .collect()
    };
    let join = |gens: &[usize]| -> usize {
        (0..k)
            .find(|&j| gens.iter().all(|&x| includes[cyclic[x]][j]))
            .expect("the whole gyrogroup contains everything")
    };

    let nodes = sets
        .into_iter()
        .enumerate()
        .map(|(idx, elements)| {
            let generators = if elements.len() == 1 {
                Vec::new()
            } else {
                (1..elements.len())
                    .find_map(|size| {
                        elements[1..]
                            .iter()
                            .copied()
                            .combinations(size)
                            .find(|gens| join(gens) == idx)
                    })
                    .expect("a subgyrogroup generates itself")
            };
            let is_group = closer.internal_gyrations_trivial(&elements);
            Subgyrogroup {
                elements,
                generators,
                closed_form: None,
                is_group,
            }
        })
        .collect();
    SubgyrogroupLattice { nodes, covers }
}

/// The three families of subgyrogroups of `G₂(n)`, as element sets computed
/// from residue arithmetic alone (no Cayley table), deduplicated and sorted
/// like the lattice nodes.
pub fn classify_subgyrogroups(n: u32) -> Result<Vec<Subgyrogroup>> {
    let p = CyclicParams::new(n)?;
    let m = p.m();
    // the cyclic subgroup of P(n) ≅ ℤ_m generated by d
    let multiples = |d: usize| -> Vec<usize> {
        let d = d % m;
        match m.checked_div(d) {
            None => vec![0],
            Some(count) => (0..count).map(|k| k * d).collect(),
        }
    };

    let mut out: Vec<Subgyrogroup> = Vec::new();
    let mut add = |mut elements: Vec<usize>, generators: Vec<usize>, form: ClosedForm| {
        elements.sort_unstable();
        if out.iter().any(|h| h.elements == elements) {
            return;
        }
        out.push(Subgyrogroup {
            elements,
            generators,
            closed_form: Some(form),
            is_group: form != ClosedForm::Pow2M(0),
        });
    };
    for s in 0..n {
        let d = (1usize << s) % m;
        let gens = if d == 0 { vec![] } else { vec![d] };
        add(multiples(d), gens, ClosedForm::Pow2(s));
    }
    for s in 0..n {
        let d = (1usize << s) % m;
        let h1 = multiples(d);
        let elements = h1
            .iter()
            .copied()
            .chain(h1.iter().map(|&x| x + m))
            .collect();
        let gens = if d == 0 { vec![m] } else { vec![d, m] };
        add(elements, gens, ClosedForm::Pow2M(s));
    }
    for s in 0..n - 1 {
        let i = 1usize << s;
        // H₁ = ⟨2i⟩ and H₂ = (m + i) ⊕ H₁ = m + (i + H₁ mod m)
        let h1 = multiples(2 * i);
        let elements = h1
            .iter()
            .copied()
            .chain(h1.iter().map(|&x| m + (i + x) % m))
            .collect();
        add(elements, vec![m + i], ClosedForm::MPlusPow2(s));
    }
    out.sort_by(|a, b| (a.elements.len(), &a.elements).cmp(&(b.elements.len(), &b.elements)));
    Ok(out)
}
