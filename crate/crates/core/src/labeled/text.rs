//! Text form `{1,2|3}:labels=2,*` and JSON form `[{"part":[1,2],"label":"2"}, ..]`.
//!
//! Grammar: `{` parts separated by `|`, each a comma list of 1-based elements
//! `}` then `:labels=` and one label per part in the same order. A label is
//! `*` or a positive integer. For [`QLabeledPartition`], `*` marks an
//! unlabeled part.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{GeneralLabeledPartition, Label, QLabeledPartition, SetPartition};
use crate::error::{Error, Result};

fn write_text<'a, I>(f: &mut fmt::Formatter<'_>, parts: I) -> fmt::Result
where
    I: Iterator<Item = (&'a [usize], String)>,
{
    let (blocks, labels): (Vec<String>, Vec<String>) = parts
        .map(|(p, l)| {
            let els: Vec<String> = p.iter().map(|x| (x + 1).to_string()).collect();
            (els.join(","), l)
        })
        .unzip();
    write!(f, "{{{}}}:labels={}", blocks.join("|"), labels.join(","))
}

fn parse_text(s: &str) -> Result<(SetPartition, Vec<Label>)> {
    let s = s.trim();
    let (blocks, labels) = s
        .split_once(":labels=")
        .ok_or_else(|| Error::Parse(format!("expected '{{..}}:labels=..' in {s:?}")))?;
    let inner = blocks
        .trim()
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("parts must be wrapped in braces: {blocks:?}")))?;
    let mut parts = Vec::new();
    if !inner.trim().is_empty() {
        for block in inner.split('|') {
            let part = block
                .split(',')
                .map(|x| match x.trim().parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(Error::Parse(format!("bad element {x:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            parts.push(part);
        }
    }
    let labels = if labels.trim().is_empty() {
        Vec::new()
    } else {
        labels.split(',').map(Label::from_str).collect::<Result<Vec<_>>>()?
    };
    if labels.len() != parts.len() {
        return Err(Error::Parse(format!("{} labels for {} parts", labels.len(), parts.len())));
    }
    let size = parts.iter().map(Vec::len).sum();
    // keep labels attached while canonicalizing
    let mut paired: Vec<(Vec<usize>, Label)> = parts.into_iter().zip(labels).collect();
    for (p, _) in paired.iter_mut() {
        p.sort_unstable();
    }
    paired.sort_by_key(|(p, _)| p.first().copied());
    let (parts, labels): (Vec<_>, Vec<_>) = paired.into_iter().unzip();
    Ok((SetPartition::new(size, parts)?, labels))
}

impl fmt::Display for GeneralLabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_text(f, self.parts().map(|(p, l)| (p, l.to_string())))
    }
}

impl FromStr for GeneralLabeledPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (base, labels) = parse_text(s)?;
        GeneralLabeledPartition::unchecked(base, labels)
    }
}

fn q_label(l: &Option<u32>) -> String {
    l.map_or_else(|| "*".to_string(), |k| k.to_string())
}

impl fmt::Display for QLabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_text(
            f,
            self.base.parts().iter().map(Vec::as_slice).zip(self.labels.iter().map(q_label)),
        )
    }
}

impl FromStr for QLabeledPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (base, labels) = parse_text(s)?;
        let labels = labels
            .into_iter()
            .map(|l| match l {
                Label::Star => None,
                Label::Index(k) => Some(k),
            })
            .collect();
        QLabeledPartition::new(base, labels)
    }
}

#[derive(Serialize, Deserialize)]
struct PartJson {
    part: Vec<usize>,
    label: String,
}

fn from_json_parts(parts: Vec<PartJson>) -> Result<(SetPartition, Vec<Label>)> {
    let text = format!(
        "{{{}}}:labels={}",
        parts
            .iter()
            .map(|p| p.part.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("|"),
        parts.iter().map(|p| p.label.as_str()).collect::<Vec<_>>().join(",")
    );
    parse_text(&text)
}

impl Serialize for GeneralLabeledPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<PartJson> = self
            .parts()
            .map(|(p, l)| PartJson {
                part: p.iter().map(|x| x + 1).collect(),
                label: l.to_string(),
            })
            .collect();
        parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneralLabeledPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<PartJson>::deserialize(d)?;
        let (base, labels) = from_json_parts(parts).map_err(serde::de::Error::custom)?;
        GeneralLabeledPartition::unchecked(base, labels).map_err(serde::de::Error::custom)
    }
}

impl Serialize for QLabeledPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<PartJson> = self
            .base
            .parts()
            .iter()
            .zip(&self.labels)
            .map(|(p, l)| PartJson {
                part: p.iter().map(|x| x + 1).collect(),
                label: q_label(l),
            })
            .collect();
        parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QLabeledPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<PartJson>::deserialize(d)?;
        let text = {
            let (base, labels) = from_json_parts(parts).map_err(serde::de::Error::custom)?;
            GeneralLabeledPartition::unchecked(base, labels)
                .map_err(serde::de::Error::custom)?
                .to_string()
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let x: GeneralLabeledPartition = "{1,2|3}:labels=2,*".parse().unwrap();
        assert_eq!(x.to_string(), "{1,2|3}:labels=2,*");
        let y: GeneralLabeledPartition = "{3|2,1}:labels=*,2".parse().unwrap();
        assert_eq!(y, x);
        let e: GeneralLabeledPartition = "{}:labels=".parse().unwrap();
        assert_eq!(e.to_string(), "{}:labels=");
        assert!("{1|1}:labels=*,*".parse::<GeneralLabeledPartition>().is_err());
        assert!("{1,2}:labels=*,*".parse::<GeneralLabeledPartition>().is_err());
        assert!("{1|3}:labels=*,*".parse::<GeneralLabeledPartition>().is_err());
    }

    #[test]
    fn q_labeled_text() {
        let x: QLabeledPartition = "{1,2|3}:labels=1,*".parse().unwrap();
        assert_eq!(x.labels(), &[Some(1), None]);
        assert_eq!(x.to_string(), "{1,2|3}:labels=1,*");
        assert!("{1|2}:labels=1,1".parse::<QLabeledPartition>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let x: GeneralLabeledPartition = "{1,3|2}:labels=*,1".parse().unwrap();
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"[{"part":[1,3],"label":"*"},{"part":[2],"label":"1"}]"#);
        assert_eq!(serde_json::from_str::<GeneralLabeledPartition>(&json).unwrap(), x);
        let y: QLabeledPartition = "{1|2,3}:labels=*,1".parse().unwrap();
        let json = serde_json::to_string(&y).unwrap();
        assert_eq!(serde_json::from_str::<QLabeledPartition>(&json).unwrap(), y);
    }
}
