//! JSON group files: `{"name": .., "degree": .., "generators": [[..], ..]}`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

/// A group read from a file, with its optional name.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: Option<String>,
    pub group: PermGroup,
}

/// Parses group JSON; `label` is used in error messages.
pub fn parse_group(text: &str, label: &str) -> Result<NamedGroup> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        path: label.to_string(),
        reason: e.to_string(),
    })?;
    if file.degree == 0 {
        return Err(Error::Parse {
            path: label.to_string(),
            reason: "degree must be at least 1".into(),
        });
    }
    let mut gens = Vec::with_capacity(file.generators.len());
    for (index, images) in file.generators.iter().enumerate() {
        if images.len() != file.degree {
            return Err(Error::BadGenerator {
                path: label.to_string(),
                index,
                reason: format!(
                    "length {} differs from degree {}",
                    images.len(),
                    file.degree
                ),
            });
        }
        let g = Permutation::from_images(images).map_err(|e| Error::BadGenerator {
            path: label.to_string(),
            index,
            reason: e.to_string(),
        })?;
        gens.push(g);
    }
    Ok(NamedGroup {
        name: file.name,
        group: PermGroup::new(file.degree, gens)?,
    })
}

pub fn read_group(path: &Path) -> Result<NamedGroup> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_group(&text, &path.display().to_string())
}

pub fn to_group_file(name: Option<&str>, group: &PermGroup) -> GroupFile {
    GroupFile {
        name: name.map(str::to_string),
        degree: group.degree(),
        generators: group.generators().iter().map(Permutation::to_vec).collect(),
    }
}

pub fn write_group(path: &Path, name: Option<&str>, group: &PermGroup) -> Result<()> {
    let mut text =
        serde_json::to_string(&to_group_file(name, group)).expect("group file serializes");
    text.push('\n');
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
