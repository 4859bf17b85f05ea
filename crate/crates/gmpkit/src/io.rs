//! JSON spec files for fields, codes, GMP specs and QT codes.
//!
//! Matrices, polynomials and field elements travel as strings in the
//! same grammar the parsers accept, so a file can be written by hand
//! and every emitted file can be read back.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::gmp::GmpSpec;
use crate::matrix::Matrix;
use crate::qt::QtSpec;
use crate::ring::{Poly, RingElem, RingSpec};

/// Field description: `{"p": 2}`, `{"p": 3, "k": 2, "modulus": [2, 2, 1]}`
/// or `{"preset": "paper-F9"}`.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FieldConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
}

impl FieldConfig {
    pub fn to_field(&self) -> Result<Field> {
        match (&self.preset, self.p) {
            (Some(_), Some(_)) => Err(Error::SpecInvalid(
                "field: give either \"preset\" or \"p\", not both".into(),
            )),
            (Some(name), None) => {
                if self.k.is_some() || self.modulus.is_some() {
                    return Err(Error::SpecInvalid(
                        "field: \"preset\" excludes \"k\" and \"modulus\"".into(),
                    ));
                }
                FieldSpec::preset(name)
            }
            (None, Some(p)) => match (self.k, &self.modulus) {
                (None, None) => FieldSpec::prime(p),
                (Some(k), Some(modulus)) => FieldSpec::extension(p, k, modulus),
                _ => Err(Error::SpecInvalid(
                    "field: \"k\" and \"modulus\" go together".into(),
                )),
            },
            (None, None) => Err(Error::SpecInvalid(
                "field: needs \"p\" or \"preset\"".into(),
            )),
        }
    }

    pub fn from_field(field: &Field) -> Self {
        if field.k() == 1 {
            FieldConfig {
                p: Some(field.p()),
                ..Default::default()
            }
        } else {
            FieldConfig {
                p: Some(field.p()),
                k: Some(field.k()),
                modulus: Some(field.modulus().to_vec()),
                preset: None,
            }
        }
    }
}

/// Constacyclic constituent: ideal generator `g` in
/// `F_q[x]/(x^m - lambda)`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ConstacyclicConfig {
    pub m: usize,
    pub lambda: String,
    pub g: String,
}

/// One linear code: either an explicit generator matrix or a
/// constacyclic description.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CodeConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gen: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constacyclic: Option<ConstacyclicConfig>,
}

impl CodeConfig {
    pub fn to_code(&self, field: &Field) -> Result<LinearCode> {
        match (&self.gen, &self.constacyclic) {
            (Some(gen), None) => Ok(LinearCode::from_gen(Matrix::parse(field, gen)?)),
            (None, Some(cc)) => {
                let lambda = crate::field::FieldElem::parse(field, &cc.lambda)?;
                let ring = RingSpec::new(field, cc.m, &lambda)?;
                let g = Poly::parse(field, &cc.g)?;
                LinearCode::constacyclic(&ring, &g)
            }
            _ => Err(Error::SpecInvalid(
                "code: needs exactly one of \"gen\" or \"constacyclic\"".into(),
            )),
        }
    }

    pub fn from_code(code: &LinearCode) -> Self {
        match code.constacyclic_info() {
            Some((ring, g_star)) => CodeConfig {
                gen: None,
                constacyclic: Some(ConstacyclicConfig {
                    m: ring.m(),
                    lambda: ring.lambda().to_string(),
                    g: g_star.to_string(),
                }),
            },
            None => CodeConfig {
                gen: Some(code.generator().to_string()),
                constacyclic: None,
            },
        }
    }
}

/// Standalone code file for `code info`: a field plus one code.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFileConfig {
    pub field: FieldConfig,
    pub code: CodeConfig,
}

impl CodeFileConfig {
    pub fn to_code(&self) -> Result<LinearCode> {
        self.code.to_code(&self.field.to_field()?)
    }
}

/// Full GMP spec file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GmpConfig {
    pub field: FieldConfig,
    pub m: usize,
    #[serde(rename = "T")]
    pub t: String,
    pub codes: Vec<CodeConfig>,
    pub mats: Vec<String>,
}

impl GmpConfig {
    pub fn to_spec(&self) -> Result<GmpSpec> {
        let field = self.field.to_field()?;
        let t = Matrix::parse(&field, &self.t)?;
        if t.rows() != self.m {
            return Err(Error::SpecInvalid(format!(
                "T is {}x{} but m = {}",
                t.rows(),
                t.cols(),
                self.m
            )));
        }
        let codes = self
            .codes
            .iter()
            .map(|c| c.to_code(&field))
            .collect::<Result<Vec<_>>>()?;
        let mats = self
            .mats
            .iter()
            .map(|a| Matrix::parse(&field, a))
            .collect::<Result<Vec<_>>>()?;
        GmpSpec::new(t, codes, mats)
    }

    pub fn from_spec(spec: &GmpSpec) -> Self {
        GmpConfig {
            field: FieldConfig::from_field(spec.field()),
            m: spec.m(),
            t: spec.t().to_string(),
            codes: spec.codes().iter().map(CodeConfig::from_code).collect(),
            mats: spec.mats().iter().map(Matrix::to_string).collect(),
        }
    }
}

/// Full QT spec file: generator polynomial matrix over
/// `F_q[x]/(x^m - lambda)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QtConfig {
    pub field: FieldConfig,
    pub m: usize,
    pub lambda: String,
    pub ell: usize,
    pub gpm: Vec<Vec<String>>,
}

impl QtConfig {
    pub fn to_spec(&self) -> Result<QtSpec> {
        let field = self.field.to_field()?;
        let lambda = crate::field::FieldElem::parse(&field, &self.lambda)?;
        let ring = RingSpec::new(&field, self.m, &lambda)?;
        let gpm = self
            .gpm
            .iter()
            .map(|row| {
                row.iter()
                    .map(|entry| RingElem::parse(&ring, entry))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let spec = QtSpec::new(&ring, gpm)?;
        if spec.ell() != self.ell {
            return Err(Error::SpecInvalid(format!(
                "gpm rows have {} entries but ell = {}",
                spec.ell(),
                self.ell
            )));
        }
        Ok(spec)
    }

    pub fn from_spec(spec: &QtSpec) -> Self {
        let ring = spec.ring();
        QtConfig {
            field: FieldConfig::from_field(ring.field()),
            m: ring.m(),
            lambda: ring.lambda().to_string(),
            ell: spec.ell(),
            gpm: spec
                .gpm()
                .iter()
                .map(|row| row.iter().map(|e| e.rep().to_string()).collect())
                .collect(),
        }
    }
}

/// Parses a GMP spec from JSON text.
pub fn read_gmp_spec(text: &str) -> Result<GmpSpec> {
    let config: GmpConfig = serde_json::from_str(text)?;
    config.to_spec()
}

/// Parses a QT spec from JSON text.
pub fn read_qt_spec(text: &str) -> Result<QtSpec> {
    let config: QtConfig = serde_json::from_str(text)?;
    config.to_spec()
}

/// Parses a standalone code file from JSON text.
pub fn read_code_spec(text: &str) -> Result<LinearCode> {
    let config: CodeFileConfig = serde_json::from_str(text)?;
    config.to_code()
}

/// Renders a GMP spec as pretty JSON.
pub fn write_gmp_spec(spec: &GmpSpec) -> Result<String> {
    Ok(serde_json::to_string_pretty(&GmpConfig::from_spec(spec))?)
}

/// Renders a QT spec as pretty JSON.
pub fn write_qt_spec(spec: &QtSpec) -> Result<String> {
    Ok(serde_json::to_string_pretty(&QtConfig::from_spec(spec))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_config_variants() {
        let f2 = FieldConfig {
            p: Some(2),
            ..Default::default()
        }
        .to_field()
        .unwrap();
        assert_eq!(f2.q(), 2);

        let f9: FieldConfig = serde_json::from_str(r#"{"preset": "paper-F9"}"#).unwrap();
        assert_eq!(f9.to_field().unwrap().q(), 9);

        let f8: FieldConfig =
            serde_json::from_str(r#"{"p": 2, "k": 3, "modulus": [1, 1, 0, 1]}"#).unwrap();
        assert_eq!(f8.to_field().unwrap().q(), 8);

        for bad in [
            r#"{}"#,
            r#"{"p": 2, "preset": "paper-F4"}"#,
            r#"{"p": 2, "k": 3}"#,
            r#"{"preset": "paper-F4", "k": 2}"#,
        ] {
            let config: FieldConfig = serde_json::from_str(bad).unwrap();
            assert!(config.to_field().is_err(), "accepted {bad}");
        }
        assert!(serde_json::from_str::<FieldConfig>(r#"{"pp": 2}"#).is_err());
    }

    #[test]
    fn field_config_round_trip() {
        for config in [
            FieldConfig {
                p: Some(7),
                ..Default::default()
            },
            serde_json::from_str(r#"{"p": 3, "k": 2, "modulus": [2, 2, 1]}"#).unwrap(),
        ] {
            let field = config.to_field().unwrap();
            let back = FieldConfig::from_field(&field);
            assert!(back.to_field().unwrap().same_as(&field));
        }
    }

    #[test]
    fn code_config_both_forms() {
        let field = FieldSpec::prime(2).unwrap();
        let by_gen: CodeConfig = serde_json::from_str(r#"{"gen": "1,0,1;0,1,1"}"#).unwrap();
        let code = by_gen.to_code(&field).unwrap();
        assert_eq!((code.length(), code.dim()), (3, 2));

        let cc: CodeConfig = serde_json::from_str(
            r#"{"constacyclic": {"m": 7, "lambda": "1", "g": "1+x+x^2+x^4"}}"#,
        )
        .unwrap();
        let code = cc.to_code(&field).unwrap();
        assert_eq!((code.length(), code.dim()), (7, 3));
        assert_eq!(code.min_distance(1 << 20).unwrap(), 4);

        let neither: CodeConfig = serde_json::from_str(r#"{}"#).unwrap();
        assert!(neither.to_code(&field).is_err());
        assert!(serde_json::from_str::<CodeConfig>(
            r#"{"gen": "1", "constacyclic": {"m": 1, "lambda": "1", "g": "1"}}"#
        )
        .map(|c| c.to_code(&field))
        .unwrap()
        .is_err());
    }

    #[test]
    fn code_config_round_trip_preserves_constacyclic() {
        let field = FieldSpec::prime(2).unwrap();
        let cc: CodeConfig = serde_json::from_str(
            r#"{"constacyclic": {"m": 7, "lambda": "1", "g": "1+x+x^2+x^4"}}"#,
        )
        .unwrap();
        let code = cc.to_code(&field).unwrap();
        let back = CodeConfig::from_code(&code);
        let back_cc = back.constacyclic.expect("constacyclic form kept");
        assert_eq!(back_cc.g, "1+x+x^2+x^4");
        assert_eq!(back_cc.m, 7);

        let plain = CodeConfig {
            gen: Some("1,0,1;0,1,1".into()),
            constacyclic: None,
        };
        let back = CodeConfig::from_code(&plain.to_code(&field).unwrap());
        assert_eq!(back.gen.as_deref(), Some("1,0,1; 0,1,1"));
    }

    #[test]
    fn gmp_spec_file_round_trip() {
        let text = r#"{
            "field": {"p": 2},
            "m": 4,
            "T": "0,1,0,0;0,1,1,0;1,1,0,0;1,1,1,1",
            "codes": [
                {"gen": "1,0,0,1;0,1,0,1;0,0,1,1"},
                {"gen": "1,0,0,1;0,1,0,1;0,0,1,1"}
            ],
            "mats": ["0,1,1,1,1;1,0,1,1,1", "1,1,0,1,1;1,0,0,1,0"]
        }"#;
        let spec = read_gmp_spec(text).unwrap();
        assert_eq!((spec.length(), spec.m(), spec.r()), (20, 4, 1));
        let emitted = write_gmp_spec(&spec).unwrap();
        let reread = read_gmp_spec(&emitted).unwrap();
        assert_eq!(
            reread.analyze().unwrap().gen.to_string(),
            spec.analyze().unwrap().gen.to_string()
        );
    }

    #[test]
    fn gmp_spec_file_rejects_m_mismatch_and_unknown_keys() {
        let wrong_m = r#"{
            "field": {"p": 2}, "m": 3,
            "T": "0,1;1,0",
            "codes": [{"gen": "1,1"}],
            "mats": ["1"]
        }"#;
        assert!(matches!(
            read_gmp_spec(wrong_m),
            Err(Error::SpecInvalid(_))
        ));
        let unknown = r#"{
            "field": {"p": 2}, "m": 2,
            "T": "0,1;1,0",
            "codes": [{"gen": "1,1"}],
            "mats": ["1"],
            "extra": 1
        }"#;
        assert!(matches!(read_gmp_spec(unknown), Err(Error::Json(_))));
    }

    #[test]
    fn qt_spec_file_round_trip() {
        let text = r#"{
            "field": {"p": 5},
            "m": 3,
            "lambda": "2",
            "ell": 2,
            "gpm": [["4+2*x", "3+3*x"], ["2*x+x^2", "0"]]
        }"#;
        let spec = read_qt_spec(text).unwrap();
        assert_eq!((spec.m(), spec.ell()), (3, 2));
        let emitted = write_qt_spec(&spec).unwrap();
        let reread = read_qt_spec(&emitted).unwrap();
        assert_eq!(reread.gpm()[0][0].rep().to_string(), "4+2*x");
        assert_eq!(
            reread.expand().unwrap().generator().to_string(),
            spec.expand().unwrap().generator().to_string()
        );
    }

    #[test]
    fn qt_spec_file_rejects_ell_mismatch() {
        let text = r#"{
            "field": {"p": 5},
            "m": 3,
            "lambda": "2",
            "ell": 3,
            "gpm": [["1", "x"]]
        }"#;
        assert!(matches!(read_qt_spec(text), Err(Error::SpecInvalid(_))));
    }

    #[test]
    fn code_file_config() {
        let text = r#"{
            "field": {"preset": "paper-F4"},
            "code": {"gen": "1,a,a^2"}
        }"#;
        let code = read_code_spec(text).unwrap();
        assert_eq!((code.length(), code.dim()), (3, 1));
        assert_eq!(code.min_distance(1 << 10).unwrap(), 3);
    }
}
