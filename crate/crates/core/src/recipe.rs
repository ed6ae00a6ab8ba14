//! Endomorphisms assembled from tame automorphism generators.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::element::WeylElement;
use crate::endo::{apply_endo, build_endo, EndoPair};
use crate::error::{Error, Result};
use crate::parse::parse;
use crate::scalar::{rat_str, rat_vec_str, Rat};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EndoGenerator {
    /// `X -> X`, `Y -> Y + f(X)`; `coeffs` lists `f` from the constant term up.
    AddPolyX {
        #[serde(with = "rat_vec_str")]
        coeffs: Vec<Rat>,
    },
    /// `X -> X + g(Y)`, `Y -> Y`.
    AddPolyY {
        #[serde(with = "rat_vec_str")]
        coeffs: Vec<Rat>,
    },
    /// `X -> aX + bY`, `Y -> cX + dY` with `ad - bc = 1`.
    Linear {
        #[serde(with = "rat_str")]
        a: Rat,
        #[serde(with = "rat_str")]
        b: Rat,
        #[serde(with = "rat_str")]
        c: Rat,
        #[serde(with = "rat_str")]
        d: Rat,
    },
}

fn univariate(coeffs: &[Rat], var: &WeylElement) -> WeylElement {
    coeffs.iter().rev().fold(WeylElement::zero(), |acc, c| {
        &(&acc * var) + &WeylElement::scalar(c.clone())
    })
}

impl EndoGenerator {
    pub fn add_poly_x<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        EndoGenerator::AddPolyX {
            coeffs: coeffs.into_iter().map(crate::scalar::rat).collect(),
        }
    }

    pub fn add_poly_y<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        EndoGenerator::AddPolyY {
            coeffs: coeffs.into_iter().map(crate::scalar::rat).collect(),
        }
    }

    /// The images `(x, y)` of `X` and `Y`.
    pub fn images(&self) -> Result<(WeylElement, WeylElement)> {
        let (x, y) = (WeylElement::x(), WeylElement::y());
        Ok(match self {
            EndoGenerator::AddPolyX { coeffs } => {
                let f = univariate(coeffs, &x);
                (x, &y + &f)
            }
            EndoGenerator::AddPolyY { coeffs } => {
                let g = univariate(coeffs, &y);
                (&x + &g, y)
            }
            EndoGenerator::Linear { a, b, c, d } => {
                let det = a * d - b * c;
                if !det.is_one() {
                    return Err(Error::BadLinearGenerator(det));
                }
                (&x.scale(a) + &y.scale(b), &x.scale(c) + &y.scale(d))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawPair {
    pub x: String,
    pub y: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct EndoRecipe {
    #[serde(default)]
    pub generators: Vec<EndoGenerator>,
    /// Explicit `(x, y)` expressions; when present the generators are
    /// ignored.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw: Option<RawPair>,
}

impl EndoRecipe {
    pub fn from_generators(generators: Vec<EndoGenerator>) -> Self {
        EndoRecipe {
            generators,
            raw: None,
        }
    }

    pub fn raw(x: &str, y: &str) -> Self {
        EndoRecipe {
            generators: vec![],
            raw: Some(RawPair {
                x: x.into(),
                y: y.into(),
            }),
        }
    }
}

/// `[g1, g2, ...]` compiles to `g1 o g2 o ...`: each generator's images are
/// pushed through the pair built so far.
pub fn compile(r: &EndoRecipe) -> Result<EndoPair> {
    if let Some(raw) = &r.raw {
        return build_endo(parse(&raw.x)?, parse(&raw.y)?);
    }
    let mut current = EndoPair::identity();
    for g in &r.generators {
        let (gx, gy) = g.images()?;
        let x = apply_endo(&current, &gx)?;
        let y = apply_endo(&current, &gy)?;
        current = build_endo(x, y)?;
    }
    Ok(current)
}

/// The three endomorphisms every suite run covers: the identity,
/// `(X, Y + X^2)`, and `(X + Y^2, Y) o (X, Y + X^2)`.
pub fn canonical_recipes() -> Vec<(String, EndoRecipe)> {
    vec![
        ("identity".into(), EndoRecipe::default()),
        (
            "triangular".into(),
            EndoRecipe::from_generators(vec![EndoGenerator::add_poly_x([0, 0, 1])]),
        ),
        (
            "composite".into(),
            EndoRecipe::from_generators(vec![
                EndoGenerator::add_poly_y([0, 0, 1]),
                EndoGenerator::add_poly_x([0, 0, 1]),
            ]),
        ),
    ]
}

/// `(X + Y^2, Y)`.
pub fn twisted_recipe() -> EndoRecipe {
    EndoRecipe::from_generators(vec![EndoGenerator::add_poly_y([0, 0, 1])])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use num_traits::Zero;

    #[test]
    fn triangular_generator() {
        let e = compile(&EndoRecipe::from_generators(vec![EndoGenerator::add_poly_x([0, 0, 1])]))
            .unwrap();
        assert_eq!(e.x, WeylElement::x());
        assert_eq!(e.y, &WeylElement::y() + &WeylElement::x().pow(2));
        assert!(e.verified());
    }

    #[test]
    fn composite_generators() {
        let r = EndoRecipe::from_generators(vec![
            EndoGenerator::add_poly_x([0, 0, 1]),
            EndoGenerator::add_poly_y([0, 0, 0, 1]),
        ]);
        let e = compile(&r).unwrap();
        // x = X + (Y + X^2)^3, y = Y + X^2
        let y1 = &WeylElement::y() + &WeylElement::x().pow(2);
        assert_eq!(e.x, &WeylElement::x() + &y1.pow(3));
        assert_eq!(e.y, y1);
        assert_eq!(e.y.commutator(&e.x), WeylElement::one());
    }

    #[test]
    fn rotation() {
        let r = EndoRecipe::from_generators(vec![EndoGenerator::Linear {
            a: rat(0),
            b: rat(1),
            c: rat(-1),
            d: rat(0),
        }]);
        let e = compile(&r).unwrap();
        assert_eq!(e.x, WeylElement::y());
        assert_eq!(e.y, -&WeylElement::x());
        let bad = EndoGenerator::Linear {
            a: rat(1),
            b: rat(1),
            c: rat(1),
            d: rat(1),
        };
        assert!(matches!(bad.images(), Err(Error::BadLinearGenerator(d)) if d.is_zero()));
    }

    #[test]
    fn raw_override() {
        let e = compile(&EndoRecipe::raw("X", "Y + X^3")).unwrap();
        assert_eq!(e.y, &WeylElement::y() + &WeylElement::x().pow(3));
        assert!(matches!(
            compile(&EndoRecipe::raw("X", "X")),
            Err(Error::NotAnEndomorphism { .. })
        ));
    }

    #[test]
    fn canonical_set_compiles() {
        for (name, r) in canonical_recipes() {
            assert!(compile(&r).unwrap().verified(), "{name}");
        }
        let c = compile(&canonical_recipes()[2].1).unwrap();
        assert_eq!(c.x, &WeylElement::x() + &WeylElement::y().pow(2));
    }
}
