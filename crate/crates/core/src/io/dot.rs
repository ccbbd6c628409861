use std::fmt::Write as _;

use crate::analyze::SubgyrogroupLattice;

/// Graphviz source for the lattice, drawn bottom-up: one node per
/// subgyrogroup (canonical generators and order), one edge per cover
/// relation from the smaller to the larger subgyrogroup.
pub fn emit_lattice_dot(lattice: &SubgyrogroupLattice) -> String {
    let mut out = String::new();
    out.push_str("digraph lattice {\n");
    out.push_str("    rankdir=BT;\n");
    out.push_str("    node [shape=plaintext];\n");
    for (i, node) in lattice.nodes.iter().enumerate() {
        let mut label = format!("{} (order {})", node.label(), node.order());
        if let Some(form) = node.closed_form {
            write!(label, "\\n{form}").unwrap();
        }
        if !node.is_group {
            label.push_str("\\nnot a group");
        }
        writeln!(out, "    n{i} [label=\"{label}\"];").unwrap();
    }
    for &(child, parent) in &lattice.covers {
        writeln!(out, "    n{child} -> n{parent};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyze::enumerate_subgyrogroups;
    use crate::groups;

    #[test]
    fn single_node() {
        let dot = emit_lattice_dot(&enumerate_subgyrogroups(&groups::cyclic(1)));
        assert_eq!(
            dot,
            "digraph lattice {\n    rankdir=BT;\n    node [shape=plaintext];\n    n0 [label=\"⟨0⟩ (order 1)\"];\n}\n"
        );
    }
}
