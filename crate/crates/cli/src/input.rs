//! Instance documents and command-line value parsing.

use std::io::Read as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use chainspace::chain::{ChainType, ProblemInstance};
use chainspace::geometry::polygon::ParamBox;
use chainspace::geometry::rational::{format_rational, parse_rational, Rational};
use chainspace::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxDocument {
    pub lower: Vec<String>,
    pub upper: Vec<String>,
}

/// `{"genus", "ranks", "degrees", "box"?}`. The genus may be omitted when
/// the instance comes from a bare type string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<i64>,
    pub ranks: Vec<i64>,
    pub degrees: Vec<i64>,
    #[serde(default, rename = "box", skip_serializing_if = "Option::is_none")]
    pub bx: Option<BoxDocument>,
}

impl BoxDocument {
    pub fn of(bx: &ParamBox) -> Self {
        Self {
            lower: bx.lower.iter().map(format_rational).collect(),
            upper: bx.upper.iter().map(format_rational).collect(),
        }
    }

    pub fn to_box(&self) -> Result<ParamBox> {
        ParamBox::new(parse_list(&self.lower)?, parse_list(&self.upper)?)
    }
}

/// A validated instance document.
#[derive(Clone, Debug)]
pub struct Instance {
    pub chain_type: ChainType,
    pub genus: Option<i64>,
    pub bx: Option<ParamBox>,
}

impl Instance {
    pub fn from_document(doc: &InstanceDocument) -> Result<Self> {
        let chain_type = ChainType::new(doc.ranks.clone(), doc.degrees.clone())?;
        if let Some(g) = doc.genus {
            ProblemInstance::new(g, chain_type.clone())?;
        }
        let bx = doc.bx.as_ref().map(BoxDocument::to_box).transpose()?;
        if let Some(b) = &bx {
            if b.dim() != chain_type.n() {
                return Err(Error::DimensionMismatch { expected: chain_type.n(), got: b.dim() });
            }
        }
        Ok(Self { chain_type, genus: doc.genus, bx })
    }

    pub fn document(&self) -> InstanceDocument {
        InstanceDocument {
            genus: self.genus,
            ranks: self.chain_type.ranks.clone(),
            degrees: self.chain_type.degrees.clone(),
            bx: self.bx.as_ref().map(BoxDocument::of),
        }
    }

    pub fn problem(&self) -> Result<ProblemInstance> {
        let g = self.genus.ok_or_else(|| Error::invalid("a genus is required (document field or --genus)"))?;
        ProblemInstance::new(g, self.chain_type.clone())
    }

    /// The document box, else `[-10, 10]^n`.
    pub fn box_or_default(&self) -> Result<ParamBox> {
        match &self.bx {
            Some(b) => Ok(b.clone()),
            None => ParamBox::cube(self.chain_type.n(), -10, 10),
        }
    }
}

fn parse_document(text: &str) -> Result<InstanceDocument> {
    let text = text.trim();
    if text.starts_with('{') {
        return serde_json::from_str(text).map_err(|e| Error::Parse(format!("instance document: {e}")));
    }
    let t: ChainType = text.parse()?;
    Ok(InstanceDocument { genus: None, ranks: t.ranks, degrees: t.degrees, bx: None })
}

/// Reads an instance from a type string, inline JSON, a file, or standard
/// input (`-` or no value).
pub fn read_instance(arg: Option<&str>) -> Result<Instance> {
    let text = match arg {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("standard input: {e}")))?;
            s
        }
        Some(s) if !s.trim_start().starts_with(['{', '(']) && Path::new(s).is_file() => {
            std::fs::read_to_string(s).map_err(|e| Error::Parse(format!("{s}: {e}")))?
        }
        Some(s) => s.to_string(),
    };
    Instance::from_document(&parse_document(&text)?)
}

pub fn parse_list(items: &[String]) -> Result<Vec<Rational>> {
    items.iter().map(|s| parse_rational(s)).collect()
}

/// Comma-separated rationals.
pub fn parse_rationals(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

pub fn parse_usizes(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("not a dimension: {x:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_string_and_json_agree() {
        let a = Instance::from_document(&parse_document("(1,2;1,0)").unwrap()).unwrap();
        let b = Instance::from_document(&parse_document(r#"{"ranks":[1,2],"degrees":[1,0]}"#).unwrap()).unwrap();
        assert_eq!(a.chain_type, b.chain_type);
    }

    #[test]
    fn document_round_trip() {
        let text = r#"{"genus":3,"ranks":[1,1,1],"degrees":[2,1,0],"box":{"lower":["-5","-1/2"],"upper":["5","7/3"]}}"#;
        let doc = parse_document(text).unwrap();
        let inst = Instance::from_document(&doc).unwrap();
        assert_eq!(serde_json::to_string(&inst.document()).unwrap(), text);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(parse_document(r#"{"genus":2,"ranks":[1],"degrees":[0],"extra":1}"#).is_err());
        let low_genus = parse_document(r#"{"genus":1,"ranks":[1,1],"degrees":[0,0]}"#).unwrap();
        assert!(Instance::from_document(&low_genus).is_err());
        let wrong_box = parse_document(r#"{"ranks":[1,1],"degrees":[0,0],"box":{"lower":["0","0"],"upper":["1","1"]}}"#).unwrap();
        assert!(matches!(Instance::from_document(&wrong_box), Err(Error::DimensionMismatch { .. })));
    }
}
