//! JSON encoding of results and errors. Rationals are always `"p/q"`
//! strings; objects keep insertion order.

use serde_json::{json, Value};

use chainspace::chain::ChainType;
use chainspace::geometry::functional::{AffineFunctional, Halfspace};
use chainspace::geometry::polygon::{ConvexCell, ParamBox};
use chainspace::geometry::rational::{format_rational, Rational};
use chainspace::params::region::{LabeledHalfspace, RegionReport};
use chainspace::Error;

use crate::input::BoxDocument;

pub fn rational(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn rationals(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(rational).collect())
}

pub fn chain_type(t: &ChainType) -> Value {
    json!({ "display": t.to_string(), "ranks": t.ranks, "degrees": t.degrees })
}

pub fn param_box(bx: &ParamBox) -> Value {
    serde_json::to_value(BoxDocument::of(bx)).expect("box document serializes")
}

pub fn functional(f: &AffineFunctional) -> Value {
    json!({
        "equation": f.equation("="),
        "coefficients": rationals(&f.coefficients),
        "constant": rational(&f.constant),
    })
}

pub fn halfspace(h: &Halfspace) -> Value {
    json!({
        "inequality": h.describe(),
        "coefficients": rationals(&h.functional.coefficients),
        "sense": h.sense.symbol(),
        "rhs": rational(&h.functional.constant),
    })
}

pub fn labeled(lh: &LabeledHalfspace) -> Value {
    let mut v = json!({ "label": lh.label });
    if let (Value::Object(dst), Value::Object(src)) = (&mut v, halfspace(&lh.halfspace)) {
        dst.extend(src);
    }
    v
}

pub fn cell(c: &ConvexCell) -> Value {
    json!({
        "vertices": c.vertices.iter().map(|p| rationals(&p.coords())).collect::<Vec<_>>(),
        "sample": rationals(&c.sample.coords()),
        "area": rational(&c.area()),
    })
}

pub fn region(r: &RegionReport) -> Value {
    let mut v = json!({ "halfspaces": r.halfspaces.iter().map(labeled).collect::<Vec<_>>() });
    if !r.annotations.is_empty() {
        v["annotations"] = r.annotations.iter().map(labeled).collect();
    }
    if let Some(c) = &r.cell {
        v["cell"] = cell(c);
    }
    v
}

/// Exit status for an error: 2 validation, 3 precondition, 4 cap, 1 other.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invalid(_)
        | Error::Parse(_)
        | Error::DimensionMismatch { .. }
        | Error::Degenerate
        | Error::OutsideBox => 2,
        Error::Precondition { .. } => 3,
        Error::CapExceeded { .. } => 4,
        Error::NotFound(_) | Error::Ambiguous { .. } => 1,
    }
}

pub fn error(e: &Error) -> Value {
    let kind = match e {
        Error::DimensionMismatch { .. } => "dimension-mismatch",
        Error::Invalid(_) => "invalid",
        Error::Parse(_) => "parse",
        Error::Precondition { .. } => "precondition",
        Error::CapExceeded { .. } => "cap-exceeded",
        Error::Degenerate => "degenerate",
        Error::OutsideBox => "outside-box",
        Error::NotFound(_) => "not-found",
        Error::Ambiguous { .. } => "ambiguous",
    };
    let mut v = json!({ "kind": kind, "message": e.to_string(), "exit_code": exit_code(e) });
    match e {
        Error::Precondition { label, .. } => v["label"] = json!(label),
        Error::Ambiguous { candidates } => v["candidates"] = json!(candidates),
        Error::CapExceeded { what, value, cap } => {
            v["what"] = json!(what);
            v["value"] = json!(value);
            v["cap"] = json!(cap);
        }
        _ => {}
    }
    json!({ "error": v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use chainspace::geometry::functional::Sense;
    use chainspace::geometry::rational::{int, rat};

    #[test]
    fn halfspace_fields_are_exact_strings() {
        let h = Halfspace::from_lhs_rhs(vec![int(1), rat(-1, 2)], Sense::Ge, rat(7, 3)).unwrap();
        let v = halfspace(&h);
        assert_eq!(v["coefficients"], json!(["1", "-1/2"]));
        assert_eq!(v["rhs"], json!("7/3"));
        assert_eq!(v["sense"], json!("≥"));
    }

    #[test]
    fn error_codes() {
        assert_eq!(exit_code(&Error::precondition("x", "y")), 3);
        assert_eq!(exit_code(&Error::Parse("p".into())), 2);
        assert_eq!(exit_code(&Error::CapExceeded { what: "w".into(), value: 9, cap: 8 }), 4);
        assert_eq!(error(&Error::precondition("b2-positive", "b2 = 0"))["error"]["label"], json!("b2-positive"));
    }
}
