//! Turning the group flags into a `FiniteGroup`.

use sumset_atoms::gtf::load_group_table_capped;
use sumset_atoms::{FiniteGroup, GroupError};

use crate::GroupSource;

#[derive(Debug)]
pub enum SourceError {
    Io(String),
    Group(GroupError),
    Name(String),
}

impl std::fmt::Display for SourceError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SourceError::Io(m) | SourceError::Name(m) => f.write_str(m),
            SourceError::Group(e) => write!(f, "{e}"),
        }
    }
}

impl From<GroupError> for SourceError {
    fn from(e: GroupError) -> Self {
        SourceError::Group(e)
    }
}

/// Short description recorded in the report.
pub fn describe(src: &GroupSource) -> String {
    if let Some(n) = src.cyclic {
        format!("C{n}")
    } else if let Some(m) = src.dihedral {
        format!("D{m}")
    } else if let Some(pq) = &src.semidirect {
        format!("C{}:C{}", pq[0], pq[1])
    } else if let Some(name) = &src.product {
        name.clone()
    } else if let Some(path) = &src.file {
        format!("file {}", path.display())
    } else {
        String::new()
    }
}

pub fn load(src: &GroupSource, cap: usize) -> Result<FiniteGroup, SourceError> {
    if let Some(n) = src.cyclic {
        return Ok(FiniteGroup::cyclic_capped(n, cap)?);
    }
    if let Some(m) = src.dihedral {
        return Ok(FiniteGroup::dihedral_capped(m, cap)?);
    }
    if let Some(pq) = &src.semidirect {
        return Ok(FiniteGroup::semidirect_capped(pq[0], pq[1], cap)?);
    }
    if let Some(name) = &src.product {
        return by_name(name, cap);
    }
    if let Some(path) = &src.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SourceError::Io(format!("cannot read {}: {e}", path.display())))?;
        return Ok(load_group_table_capped(&text, cap)?);
    }
    Err(SourceError::Name("no group source given".into()))
}

fn number(s: &str, name: &str) -> Result<usize, SourceError> {
    s.parse()
        .map_err(|_| SourceError::Name(format!("bad factor `{name}`")))
}

fn factor(f: &str, cap: usize) -> Result<FiniteGroup, SourceError> {
    if let Some((a, b)) = f.split_once(':') {
        let p = a.strip_prefix('C').ok_or_else(|| SourceError::Name(format!("bad factor `{f}`")))?;
        let q = b.strip_prefix('C').ok_or_else(|| SourceError::Name(format!("bad factor `{f}`")))?;
        return Ok(FiniteGroup::semidirect_capped(number(p, f)?, number(q, f)?, cap)?);
    }
    if let Some(n) = f.strip_prefix('C') {
        return Ok(FiniteGroup::cyclic_capped(number(n, f)?, cap)?);
    }
    if let Some(m) = f.strip_prefix('D') {
        return Ok(FiniteGroup::dihedral_capped(number(m, f)?, cap)?);
    }
    Err(SourceError::Name(format!("bad factor `{f}`; expected Cn, Dm or Cp:Cq")))
}

/// `C2xD4`, `C4xC4`, `C7:C3`: factors joined by `x`.
pub fn by_name(name: &str, cap: usize) -> Result<FiniteGroup, SourceError> {
    let mut parts = name.split('x');
    let first = parts.next().unwrap_or_default();
    let mut g = factor(first, cap)?;
    for part in parts {
        g = FiniteGroup::direct_product_capped(&g, &factor(part, cap)?, cap)?;
    }
    Ok(g)
}
