//! JSON interchange: ring specs, elements, polynomials, vectors and matrices.
//!
//! Elements of a ring with `m = 1` are written as bare integers, otherwise as
//! ascending coordinate lists. Both forms are accepted on input.

use polycyclic::{HowellBasis, Poly, RingElem, RingMatrix, RingSpec};
use serde_json::{json, Value};

use crate::CliError;

pub fn parse(arg: &str, what: &str) -> Result<Value, CliError> {
    serde_json::from_str(arg).map_err(|e| CliError::Malformed(format!("{what}: {e}")))
}

fn uint(v: &Value, what: &str) -> Result<u64, CliError> {
    v.as_u64().ok_or_else(|| CliError::Malformed(format!("{what}: expected a non-negative integer, got {v}")))
}

fn list<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| CliError::Malformed(format!("{what}: expected a list, got {v}")))
}

/// A ring argument: a Galois ring, or a plain `Z_M` (only for DFT checks).
pub enum RingArg {
    Galois(RingSpec),
    Modular(u64),
}

pub fn ring_arg(arg: &str) -> Result<RingArg, CliError> {
    let v = parse(arg, "--ring")?;
    let obj = v.as_object().ok_or_else(|| CliError::Malformed("--ring: expected an object".into()))?;
    if let Some(m) = obj.get("modulusZ") {
        return Ok(RingArg::Modular(uint(m, "modulusZ")?));
    }
    let field = |k: &str| obj.get(k).ok_or_else(|| CliError::Malformed(format!("--ring: missing \"{k}\"")));
    let p = uint(field("p")?, "p")?;
    let r = u32::try_from(uint(field("r")?, "r")?).map_err(|_| CliError::Malformed("r: too large".into()))?;
    let ring = match obj.get("modulus") {
        Some(m) => {
            let coeffs = list(m, "modulus")?.iter().map(|c| uint(c, "modulus")).collect::<Result<Vec<_>, _>>()?;
            let ring = RingSpec::with_modulus(p, r, coeffs)?;
            if let Some(m) = obj.get("m") {
                if uint(m, "m")? as usize != ring.m() {
                    return Err(polycyclic::Error::InvalidRing("m disagrees with the modulus degree".into()).into());
                }
            }
            ring
        }
        None => RingSpec::new(p, r, uint(field("m")?, "m")? as usize)?,
    };
    Ok(RingArg::Galois(ring))
}

pub fn ring(arg: &str) -> Result<RingSpec, CliError> {
    match ring_arg(arg)? {
        RingArg::Galois(r) => Ok(r),
        RingArg::Modular(_) => Err(polycyclic::Error::InvalidRing(
            "a plain modulus is only supported by dft-check; give p, r and m".into(),
        )
        .into()),
    }
}

pub fn elem(ring: &RingSpec, v: &Value) -> Result<RingElem, CliError> {
    let mut coeffs = match v {
        Value::Number(_) => vec![uint(v, "element")?],
        Value::Array(a) => a.iter().map(|c| uint(c, "element")).collect::<Result<_, _>>()?,
        _ => return Err(CliError::Malformed(format!("element: expected an integer or a list, got {v}"))),
    };
    if coeffs.len() > ring.m() {
        return Err(polycyclic::Error::DimensionMismatch { expected: ring.m(), found: coeffs.len() }.into());
    }
    coeffs.resize(ring.m(), 0);
    Ok(ring.elem(coeffs)?)
}

pub fn elems(ring: &RingSpec, v: &Value) -> Result<Vec<RingElem>, CliError> {
    list(v, "vector")?.iter().map(|e| elem(ring, e)).collect()
}

pub fn poly(ring: &RingSpec, arg: &str, what: &str) -> Result<Poly, CliError> {
    Ok(Poly::new(elems(ring, &parse(arg, what)?)?))
}

pub fn vector(ring: &RingSpec, arg: &str, what: &str) -> Result<Vec<RingElem>, CliError> {
    elems(ring, &parse(arg, what)?)
}

pub fn vectors(ring: &RingSpec, arg: &str, what: &str) -> Result<Vec<Vec<RingElem>>, CliError> {
    list(&parse(arg, what)?, what)?.iter().map(|v| elems(ring, v)).collect()
}

/// Output rendering: JSON values, or human-readable strings with `pretty`.
#[derive(Clone, Copy)]
pub struct Render {
    pub pretty: bool,
}

impl Render {
    pub fn ring(&self, r: &RingSpec) -> Value {
        json!({ "p": r.p(), "r": r.r(), "m": r.m(), "modulus": r.modulus().map(|m| m.to_vec()) })
    }

    pub fn elem(&self, r: &RingSpec, e: &RingElem) -> Value {
        if self.pretty {
            return Value::String(elem_string(r, e));
        }
        if r.m() == 1 {
            json!(e.coeffs()[0])
        } else {
            json!(e.coeffs())
        }
    }

    pub fn elems(&self, r: &RingSpec, v: &[RingElem]) -> Value {
        Value::Array(v.iter().map(|e| self.elem(r, e)).collect())
    }

    /// A polynomial, or a quotient element given by its coefficients.
    pub fn poly(&self, r: &RingSpec, coeffs: &[RingElem]) -> Value {
        if self.pretty {
            Value::String(poly_string(r, coeffs, "x"))
        } else {
            self.elems(r, coeffs)
        }
    }

    pub fn matrix(&self, m: &RingMatrix) -> Value {
        Value::Array(m.row_vecs().iter().map(|row| self.elems(m.ring(), row)).collect())
    }

    pub fn basis(&self, b: &HowellBasis) -> Value {
        self.matrix(b.matrix())
    }
}

fn elem_string(r: &RingSpec, e: &RingElem) -> String {
    let terms: Vec<String> = e
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| monomial(&c.to_string(), "y", i))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else if r.m() == 1 {
        terms[0].clone()
    } else {
        terms.join(" + ")
    }
}

fn monomial(coeff: &str, var: &str, k: usize) -> String {
    let power = match k {
        0 if coeff.contains(' ') => return format!("({coeff})"),
        0 => return coeff.to_string(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    match coeff {
        "1" => power,
        c if c.contains(' ') => format!("({c}){power}"),
        c => format!("{c}{power}"),
    }
}

fn poly_string(r: &RingSpec, coeffs: &[RingElem], var: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !r.is_zero(c))
        .map(|(k, c)| monomial(&elem_string(r, c), var, k))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
