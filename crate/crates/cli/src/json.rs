//! JSON encodings of the core types, with matching decoders.

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};

use theta_hecke_core::bipartition::{Bipartition, VirtualSum};
use theta_hecke_core::hecke::HeckeElem;
use theta_hecke_core::partition::Partition;
use theta_hecke_core::thetamod::{BasisIndex, Matrix, SVec};
use theta_hecke_core::weyl::ClassType;
use theta_hecke_core::{HalfInt, LaurentPoly, SignedPerm};

/// Exponent numerators (over 2) as keys, ascending.
pub fn laurent(p: &LaurentPoly) -> Value {
    let mut m = Map::new();
    for &(e, c) in p.terms() {
        // Coefficients beyond i64 are written as decimal strings.
        let v = i64::try_from(c).map(Value::from).unwrap_or_else(|_| Value::String(c.to_string()));
        m.insert(e.to_string(), v);
    }
    Value::Object(m)
}

pub fn parse_laurent(v: &Value) -> Result<LaurentPoly> {
    let obj = v.as_object().ok_or_else(|| anyhow!("Laurent polynomial must be an object"))?;
    let mut terms = Vec::with_capacity(obj.len());
    for (k, c) in obj {
        let e: i64 = k.parse().with_context(|| format!("bad exponent key {:?}", k))?;
        let c = match c {
            Value::String(s) => s.parse::<i128>().ok(),
            _ => c.as_i64().map(i128::from),
        }
        .ok_or_else(|| anyhow!("coefficient for {:?} is not an integer", k))?;
        terms.push((e, c));
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn perm(w: &SignedPerm) -> Value {
    json!(w.images())
}

pub fn parse_perm(v: &Value) -> Result<SignedPerm> {
    let arr = v.as_array().ok_or_else(|| anyhow!("signed permutation must be an array"))?;
    let images = arr
        .iter()
        .map(|x| x.as_i64().map(|x| x as i32).ok_or_else(|| anyhow!("non-integer image")))
        .collect::<Result<Vec<_>>>()?;
    Ok(SignedPerm::from_images(images)?)
}

pub fn hecke(a: &HeckeElem<LaurentPoly>) -> Value {
    Value::Array(a.terms.iter().map(|(w, c)| json!({"perm": perm(w), "poly": laurent(c)})).collect())
}

pub fn parse_hecke(v: &Value) -> Result<HeckeElem<LaurentPoly>> {
    let mut out = HeckeElem::default();
    for item in v.as_array().ok_or_else(|| anyhow!("Hecke element must be an array"))? {
        let w = parse_perm(&item["perm"])?;
        let c = parse_laurent(&item["poly"])?;
        if out.terms.insert(w, c).is_some() {
            bail!("repeated basis element");
        }
    }
    Ok(out)
}

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn parse_partition(v: &Value) -> Result<Partition> {
    let arr = v.as_array().ok_or_else(|| anyhow!("partition must be an array"))?;
    let parts = arr
        .iter()
        .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| anyhow!("partition parts must be nonnegative integers")))
        .collect::<Result<Vec<_>>>()?;
    Partition::from_parts(parts.clone())
        .ok_or_else(|| anyhow!("{:?} is not a weakly decreasing list of positive parts", parts))
}

pub fn bipartition(b: &Bipartition) -> Value {
    json!([partition(&b.first), partition(&b.second)])
}

pub fn parse_bipartition(v: &Value) -> Result<Bipartition> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b]) => Ok(Bipartition::new(parse_partition(a)?, parse_partition(b)?)),
        _ => bail!("bipartition must be an array of two partitions"),
    }
}

pub fn virtual_sum(v: &VirtualSum<Bipartition>) -> Value {
    Value::Array(v.iter().map(|(b, m)| json!({"bipartition": bipartition(b), "mult": m})).collect())
}

pub fn parse_virtual_sum(v: &Value) -> Result<VirtualSum<Bipartition>> {
    let mut out = VirtualSum::new();
    for item in v.as_array().ok_or_else(|| anyhow!("virtual sum must be an array"))? {
        let b = parse_bipartition(&item["bipartition"])?;
        let m = item["mult"].as_i64().ok_or_else(|| anyhow!("mult must be an integer"))?;
        out.insert(b, m);
    }
    Ok(out)
}

pub fn class_type(c: &ClassType) -> Value {
    json!({"positive": partition(&c.positive), "negative": partition(&c.negative)})
}

pub fn basis_index(b: &BasisIndex) -> Value {
    json!({"k": b.k, "d1": perm(&b.d1), "d2": perm(&b.d2), "x": perm(&b.x)})
}

pub fn module_vec(basis: &[BasisIndex], v: &SVec<LaurentPoly>) -> Value {
    Value::Array(v.iter().map(|(&i, c)| json!({"index": basis_index(&basis[i]), "coeff": laurent(c)})).collect())
}

/// Column-major.
pub fn matrix(basis: &[BasisIndex], m: &Matrix<LaurentPoly>) -> Value {
    Value::Array(m.cols.iter().map(|c| module_vec(basis, c)).collect())
}

pub fn half(h: HalfInt) -> Value {
    json!(h.to_string())
}

/// Renders with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are always serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_keys_ascend_numerically() {
        let p = LaurentPoly::from_terms([(3, 1), (-2, 2), (-10, 1), (10, -4)]);
        let s = serde_json::to_string(&laurent(&p)).unwrap();
        assert_eq!(s, r#"{"-10":1,"-2":2,"3":1,"10":-4}"#);
        assert_eq!(parse_laurent(&serde_json::from_str(&s).unwrap()).unwrap(), p);
    }

    #[test]
    fn round_trips() {
        let w = SignedPerm::from_images(vec![-1, 2]).unwrap();
        assert_eq!(serde_json::to_string(&perm(&w)).unwrap(), "[-1,2]");
        assert_eq!(parse_perm(&perm(&w)).unwrap(), w);
        let b = Bipartition::new(Partition::new(vec![2, 1]), Partition::empty());
        assert_eq!(serde_json::to_string(&bipartition(&b)).unwrap(), "[[2,1],[]]");
        assert_eq!(parse_bipartition(&bipartition(&b)).unwrap(), b);
        assert!(parse_partition(&json!([1, 2])).is_err());
        assert!(parse_perm(&json!([1, 1])).is_err());
    }
}
