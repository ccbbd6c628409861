//! Cayley and gyration tables.
//!
//! The csv interchange format has three sections:
//!
//! ```text
//! cayley,8
//! 0,1,2,3,4,5,6,7
//! ...                     (N rows)
//! gyration,8
//! I,I,I,I,I,I,I,I
//! ...                     (N rows of legend symbols)
//! legend,2
//! perm I: 0 1 2 3 4 5 6 7
//! perm A: 0 3 2 1 4 7 6 5
//! ```
//!
//! A legend line lists the images of `0..N` under the named permutation.
//! The identity is always called `I`; the other gyrations are named
//! `A`, `B`, .. in order of first appearance in the table.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gyrogroup::FiniteGyrogroup;
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
}

/// Both tables of a gyrogroup, with gyrations as legend symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDocument {
    pub order: usize,
    pub cayley: Vec<Vec<usize>>,
    pub gyration: Vec<Vec<String>>,
    pub legend: Vec<(String, Permutation)>,
}

const LETTERS: &[u8] = b"ABCDEFGHJKLMNOPQRSTUVWXYZ";

fn symbol(k: usize) -> String {
    let letter = LETTERS[k % LETTERS.len()] as char;
    match k / LETTERS.len() {
        0 => letter.to_string(),
        round => format!("{letter}{}", round + 1),
    }
}

impl TableDocument {
    pub fn from_gyrogroup(g: &FiniteGyrogroup) -> Self {
        let mut next = 0;
        let legend: Vec<(String, Permutation)> = g
            .perms()
            .iter()
            .map(|p| {
                let name = if p.is_identity() {
                    "I".to_string()
                } else {
                    next += 1;
                    symbol(next - 1)
                };
                (name, p.clone())
            })
            .collect();
        TableDocument {
            order: g.order(),
            cayley: g
                .cayley_rows()
                .map(|r| r.iter().map(|&x| x as usize).collect())
                .collect(),
            gyration: g
                .gyr_rows()
                .map(|r| r.iter().map(|&k| legend[k as usize].0.clone()).collect())
                .collect(),
            legend,
        }
    }

    /// Builds the gyrogroup, moving a left identity to index 0 if it is
    /// elsewhere. Axioms are left to [`crate::verify::verify`].
    pub fn to_gyrogroup(&self) -> Result<FiniteGyrogroup> {
        let index: HashMap<&str, usize> = self
            .legend
            .iter()
            .enumerate()
            .map(|(i, (name, _))| (name.as_str(), i))
            .collect();
        let gyr = self
            .gyration
            .iter()
            .enumerate()
            .map(|(a, row)| {
                row.iter()
                    .enumerate()
                    .map(|(b, sym)| {
                        index
                            .get(sym.as_str())
                            .copied()
                            .ok_or_else(|| Error::Structure {
                                location: format!("gyration[{a}][{b}]"),
                                message: format!("symbol {sym:?} is not in the legend"),
                            })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let perms = self.legend.iter().map(|(_, p)| p.clone()).collect();
        let g = FiniteGyrogroup::from_raw_tables(self.cayley.clone(), gyr, perms)?;
        Ok(match g.clone().normalize_identity() {
            Some(normalized) => normalized,
            None => g,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "cayley,{}", self.order).unwrap();
        for row in &self.cayley {
            out.push_str(&join(row.iter().map(usize::to_string), ","));
            out.push('\n');
        }
        writeln!(out, "gyration,{}", self.order).unwrap();
        for row in &self.gyration {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        writeln!(out, "legend,{}", self.legend.len()).unwrap();
        for (name, p) in &self.legend {
            writeln!(
                out,
                "perm {name}: {}",
                join(p.images().map(|x| x.to_string()), " ")
            )
            .unwrap();
        }
        out
    }

    pub fn to_text(&self) -> String {
        let labels: Vec<String> = (0..self.order).map(|x| x.to_string()).collect();
        let mut out = String::new();
        writeln!(out, "Cayley table (order {})", self.order).unwrap();
        grid(
            &mut out,
            "⊕",
            &labels,
            self.cayley
                .iter()
                .map(|r| r.iter().map(usize::to_string).collect()),
        );
        writeln!(out).unwrap();
        writeln!(out, "Gyration table (order {})", self.order).unwrap();
        grid(&mut out, "gyr", &labels, self.gyration.iter().cloned());
        writeln!(out).unwrap();
        for (name, p) in &self.legend {
            writeln!(out, "{name} = {p}").unwrap();
        }
        out
    }

    pub fn parse_csv(input: &str) -> Result<Self> {
        let mut lines = Lines::new(input);

        let order = lines.header("cayley")?;
        if order == 0 {
            return Err(lines.error(1, "order must be positive"));
        }
        let mut cayley = Vec::with_capacity(order);
        for _ in 0..order {
            let (line_no, fields) = lines.row(order, "Cayley")?;
            let row = fields
                .into_iter()
                .map(|(col, f)| {
                    f.parse::<usize>().map_err(|_| Error::Parse {
                        line: line_no,
                        column: col,
                        message: format!("expected an element, found {f:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            cayley.push(row);
        }

        let gyr_order = lines.header("gyration")?;
        if gyr_order != order {
            return Err(lines.error(
                1,
                &format!("gyration table order {gyr_order} differs from Cayley order {order}"),
            ));
        }
        let mut gyration = Vec::with_capacity(order);
        for _ in 0..order {
            let (line_no, fields) = lines.row(order, "gyration")?;
            let row = fields
                .into_iter()
                .map(|(col, f)| {
                    if f.is_empty() {
                        Err(Error::Parse {
                            line: line_no,
                            column: col,
                            message: "empty symbol".into(),
                        })
                    } else {
                        Ok(f.to_string())
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            gyration.push(row);
        }

        let count = lines.header("legend")?;
        let mut legend: Vec<(String, Permutation)> = Vec::with_capacity(count);
        for _ in 0..count {
            let (line_no, line) = lines
                .next_line()
                .ok_or_else(|| lines.error(1, "missing legend line"))?;
            let rest = line.strip_prefix("perm ").ok_or_else(|| Error::Parse {
                line: line_no,
                column: 1,
                message: "expected `perm NAME: images..`".into(),
            })?;
            let (name, images) = rest.split_once(':').ok_or_else(|| Error::Parse {
                line: line_no,
                column: 6,
                message: "missing `:` after the permutation name".into(),
            })?;
            let name = name.trim();
            if name.is_empty() || name.contains(',') {
                return Err(Error::Parse {
                    line: line_no,
                    column: 6,
                    message: format!("bad symbol {name:?}"),
                });
            }
            let images = images
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: line_no,
                        column: 1,
                        message: format!("expected an element, found {t:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let location = format!("line {line_no}");
            if images.len() != order {
                return Err(Error::Structure {
                    location,
                    message: format!(
                        "permutation {name} lists {} images, expected {order}",
                        images.len()
                    ),
                });
            }
            let p = Permutation::from_images(images).map_err(|e| Error::Structure {
                location: location.clone(),
                message: e.to_string(),
            })?;
            if legend.iter().any(|(n, _)| n == name) {
                return Err(Error::Structure {
                    location,
                    message: format!("symbol {name} is defined twice"),
                });
            }
            legend.push((name.to_string(), p));
        }
        if let Some((line_no, _)) = lines.next_line() {
            return Err(Error::Parse {
                line: line_no,
                column: 1,
                message: "unexpected content after the legend".into(),
            });
        }

        for (a, row) in cayley.iter().enumerate() {
            if let Some((b, &x)) = row.iter().enumerate().find(|(_, &x)| x >= order) {
                return Err(Error::Structure {
                    location: format!("cayley[{a}][{b}]"),
                    message: format!("element {x} is out of range for order {order}"),
                });
            }
        }
        for (a, row) in gyration.iter().enumerate() {
            if let Some((b, sym)) = row
                .iter()
                .enumerate()
                .find(|(_, s)| !legend.iter().any(|(n, _)| n == *s))
            {
                return Err(Error::Structure {
                    location: format!("gyration[{a}][{b}]"),
                    message: format!("symbol {sym:?} is not defined in the legend"),
                });
            }
        }
        Ok(TableDocument {
            order,
            cayley,
            gyration,
            legend,
        })
    }
}

pub fn emit_tables(g: &FiniteGyrogroup, format: TableFormat) -> String {
    let doc = TableDocument::from_gyrogroup(g);
    match format {
        TableFormat::Text => doc.to_text(),
        TableFormat::Csv => doc.to_csv(),
    }
}

/// Parses a csv table document and builds the gyrogroup.
pub fn load_tables(input: &str) -> Result<FiniteGyrogroup> {
    TableDocument::parse_csv(input)?.to_gyrogroup()
}

fn join(items: impl Iterator<Item = String>, sep: &str) -> String {
    items.collect::<Vec<_>>().join(sep)
}

fn grid(
    out: &mut String,
    corner: &str,
    labels: &[String],
    rows: impl Iterator<Item = Vec<String>>,
) {
    let rows: Vec<Vec<String>> = rows.collect();
    let width = labels
        .iter()
        .chain(rows.iter().flatten())
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    let head = corner.chars().count().max(width);
    let pad = |s: &str, w: usize| format!("{}{s}", " ".repeat(w - s.chars().count()));
    let header: Vec<String> = labels.iter().map(|l| pad(l, width)).collect();
    writeln!(out, "{} | {}", pad(corner, head), header.join(" ")).unwrap();
    writeln!(
        out,
        "{}-+-{}",
        "-".repeat(head),
        "-".repeat(header.join(" ").chars().count())
    )
    .unwrap();
    for (label, row) in labels.iter().zip(&rows) {
        let cells: Vec<String> = row.iter().map(|c| pad(c, width)).collect();
        writeln!(out, "{} | {}", pad(label, head), cells.join(" ")).unwrap();
    }
}

/// Line cursor for the csv parser. Line numbers are 1-based; `\r\n` is
/// accepted and treated as `\n`.
struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(input: &'a str) -> Self {
        Lines {
            inner: input.lines().enumerate().peekable(),
            last_line: 0,
        }
    }

    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        let (i, line) = self.inner.next()?;
        self.last_line = i + 1;
        Some((i + 1, line.trim_end_matches('\r')))
    }

    fn error(&self, column: usize, message: &str) -> Error {
        Error::Parse {
            line: self.last_line.max(1),
            column,
            message: message.to_string(),
        }
    }

    fn header(&mut self, kind: &str) -> Result<usize> {
        let (line_no, line) = self.next_line().ok_or_else(|| Error::Parse {
            line: self.last_line + 1,
            column: 1,
            message: format!("missing `{kind},N` header"),
        })?;
        let count = line
            .strip_prefix(kind)
            .and_then(|rest| rest.strip_prefix(','))
            .and_then(|n| n.trim().parse::<usize>().ok());
        count.ok_or_else(|| Error::Parse {
            line: line_no,
            column: 1,
            message: format!("expected `{kind},N`, found {line:?}"),
        })
    }

    /// One table row with exactly `width` fields, each with its 1-based
    /// character column.
    fn row(&mut self, width: usize, table: &str) -> Result<(usize, Vec<(usize, &'a str)>)> {
        let (line_no, line) = self.next_line().ok_or_else(|| Error::Parse {
            line: self.last_line + 1,
            column: 1,
            message: format!("{table} table ends early"),
        })?;
        let mut fields = Vec::with_capacity(width);
        let mut column = 1;
        for f in line.split(',') {
            fields.push((column, f.trim()));
            column += f.chars().count() + 1;
        }
        if fields.len() != width {
            return Err(Error::Parse {
                line: line_no,
                column: 1,
                message: format!("{table} row has {} entries, expected {width}", fields.len()),
            });
        }
        Ok((line_no, fields))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_g2;
    use crate::groups;

    #[test]
    fn csv_row_of_g2_4() {
        let csv = emit_tables(&build_g2(4).unwrap(), TableFormat::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "cayley,16");
        assert_eq!(lines[1 + 8], "8,13,10,15,12,9,14,11,0,5,2,7,4,1,6,3");
        assert_eq!(lines[17], "gyration,16");
        assert_eq!(lines[34], "legend,2");
        assert_eq!(lines[35], "perm I: 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15");
        assert_eq!(lines[36], "perm A: 0 5 2 7 4 1 6 3 8 13 10 15 12 9 14 11");
    }

    #[test]
    fn trivial_group_text_and_csv() {
        let g = groups::cyclic(1);
        assert_eq!(
            emit_tables(&g, TableFormat::Csv),
            "cayley,1\n0\ngyration,1\nI\nlegend,1\nperm I: 0\n"
        );
        let text = emit_tables(&g, TableFormat::Text);
        assert!(text.contains("0 | 0\n"), "{text}");
    }

    #[test]
    fn text_layout_of_g2_3() {
        let text = emit_tables(&build_g2(3).unwrap(), TableFormat::Text);
        assert!(text.contains("4 | 4 7 6 5 0 3 2 1\n"), "{text}");
        assert!(text.contains("  1 | I I I I A A A A\n"), "{text}");
        assert!(text.ends_with("I = ()\nA = (1, 3)(5, 7)\n"), "{text}");
    }

    #[test]
    fn short_row_is_a_parse_error() {
        let csv = emit_tables(&build_g2(3).unwrap(), TableFormat::Csv);
        let broken = csv.replacen("3,0,1,2,7,4,5,6", "3,0,1,2,7,4,5", 1);
        match load_tables(&broken) {
            Err(Error::Parse { line: 5, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_entry_reports_column() {
        let csv = emit_tables(&build_g2(3).unwrap(), TableFormat::Csv);
        let broken = csv.replacen("1,2,3,0,5,6,7,4", "1,2,x,0,5,6,7,4", 1);
        match load_tables(&broken) {
            Err(Error::Parse {
                line: 3, column: 5, ..
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn undefined_symbol_is_structural() {
        let csv = emit_tables(&build_g2(3).unwrap(), TableFormat::Csv);
        let broken = csv.replace("perm A:", "perm B:");
        assert!(matches!(load_tables(&broken), Err(Error::Structure { .. })));
        let broken = csv.replace("perm A: 0 3", "perm A: 0 0");
        assert!(matches!(load_tables(&broken), Err(Error::Structure { .. })));
    }

    #[test]
    fn crlf_is_accepted() {
        let g = build_g2(3).unwrap();
        let csv = emit_tables(&g, TableFormat::Csv).replace('\n', "\r\n");
        assert_eq!(load_tables(&csv).unwrap(), g);
    }

    #[test]
    fn identity_elsewhere_is_normalized() {
        let g = groups::cyclic(4);
        let sigma = Permutation::from_cycles(4, &[&[0, 2]]).unwrap();
        let moved = g.relabel(&sigma);
        let csv = emit_tables(&moved, TableFormat::Csv);
        assert_eq!(load_tables(&csv).unwrap(), g);
    }
}
