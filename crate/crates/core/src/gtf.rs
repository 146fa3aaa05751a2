//! Group Table Format: line 1 holds `n`, the next `n` lines hold the rows of
//! the multiplication table, optional trailing lines `# i name` label elements.

use crate::error::GroupError;
use crate::group::{FiniteGroup, DEFAULT_MAX_ORDER};

pub fn load_group_table(text: &str) -> Result<FiniteGroup, GroupError> {
    load_group_table_capped(text, DEFAULT_MAX_ORDER)
}

pub fn load_group_table_capped(text: &str, cap: usize) -> Result<FiniteGroup, GroupError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or(GroupError::Parse {
        line: 1,
        message: "missing order line".into(),
    })?;
    let n: usize = header.parse().map_err(|_| GroupError::Parse {
        line: first,
        message: format!("invalid order `{header}`"),
    })?;
    if n == 0 {
        return Err(GroupError::EmptyGroup);
    }
    if n > cap {
        return Err(GroupError::TooLarge { order: n, cap });
    }
    let mut rows = Vec::with_capacity(n);
    let mut labels: Vec<Option<String>> = vec![None; n];
    let mut any_label = false;
    for (line, content) in lines {
        if let Some(rest) = content.strip_prefix('#') {
            let rest = rest.trim();
            let (idx, name) = rest.split_once(char::is_whitespace).ok_or(GroupError::Parse {
                line,
                message: "label line must be `# i name`".into(),
            })?;
            let i: usize = idx.parse().map_err(|_| GroupError::Parse {
                line,
                message: format!("invalid label index `{idx}`"),
            })?;
            if i >= n {
                return Err(GroupError::ElementOutOfRange { element: i, order: n });
            }
            labels[i] = Some(name.trim().to_string());
            any_label = true;
            continue;
        }
        if rows.len() == n {
            return Err(GroupError::Parse {
                line,
                message: "unexpected extra row".into(),
            });
        }
        let row = content
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| GroupError::Parse {
                    line,
                    message: format!("invalid entry `{t}`"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(GroupError::Parse {
                line,
                message: format!("expected {n} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(GroupError::Parse {
            line: text.lines().count(),
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    let labels = any_label.then(|| {
        labels
            .into_iter()
            .enumerate()
            .map(|(i, l)| l.unwrap_or_else(|| i.to_string()))
            .collect()
    });
    FiniteGroup::from_rows(&rows, labels, cap)
}

pub fn dump_group_table(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| g.mul(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(labels) = g.labels() {
        for (i, l) in labels.iter().enumerate() {
            out.push_str(&format!("# {i} {l}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_table() {
        let g = load_group_table("1\n0\n").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn z2_table() {
        let g = load_group_table("2\n0 1\n1 0\n").unwrap();
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn non_latin_row() {
        let err = load_group_table("3\n1 1 1\n0 1 2\n2 0 1\n").unwrap_err();
        assert_eq!(err, GroupError::RowNotPermutation { row: 0 });
        assert!(err.to_string().contains("row 0 not a permutation"));
    }

    #[test]
    fn identity_moved_to_front() {
        // Z/3 with identity at index 2: 2 = e, 0 = g, 1 = g^2
        let g = load_group_table("3\n1 2 0\n2 0 1\n0 1 2\n").unwrap();
        for j in 0..3 {
            assert_eq!(g.mul(0, j), j);
        }
        g.validate().unwrap();
    }

    #[test]
    fn non_associative_latin_square() {
        // A loop of order 5 that is not a group.
        let t = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        assert!(matches!(
            load_group_table(t),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn round_trip_with_labels() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let text = dump_group_table(&d3);
        let back = load_group_table(&text).unwrap();
        assert_eq!(back, d3);
    }

    #[test]
    fn size_and_parse_errors() {
        assert!(matches!(
            load_group_table_capped("3\n0 1 2\n1 2 0\n2 0 1\n", 2),
            Err(GroupError::TooLarge { order: 3, cap: 2 })
        ));
        assert!(matches!(load_group_table("x"), Err(GroupError::Parse { .. })));
        assert!(matches!(
            load_group_table("2\n0 1\n"),
            Err(GroupError::Parse { .. })
        ));
        assert!(matches!(
            load_group_table("2\n0 2\n1 0\n"),
            Err(GroupError::EntryOutOfRange { .. })
        ));
    }
}
