//! Symmetric functions of bounded degree over `Q(q, t)`.

mod bisym;
mod partition;
mod plethysm;
mod serial;
mod symfun;
mod tables;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use bisym::BiSymFun;
pub use partition::{Cell, Partition};
pub use plethysm::{b_poly, m_poly, make_alphabet, plethysm, plethysm_scalar, AlphaTerm, Alphabet, AlphabetSpec};
pub use symfun::SymFun;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    M,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "p")]
    P,
    #[serde(rename = "s")]
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        };
        f.write_str(c)
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::{q_binomial, QtRational};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn s(v: &[u32]) -> SymFun {
        SymFun::s(&p(v), 6).unwrap()
    }

    #[test]
    fn basis_changes() {
        assert_eq!(SymFun::e(2, 4).unwrap().to_basis(Basis::S), s(&[1, 1]));
        assert_eq!(SymFun::h(2, 4).unwrap().to_basis(Basis::S), s(&[2]));
        let p2 = SymFun::p(2, 4).unwrap().to_basis(Basis::S);
        assert_eq!(p2, s(&[2]).sub(&s(&[1, 1])));
        assert_eq!(p2.basis(), Basis::S);
        let f = s(&[3, 1]).add(&s(&[2, 1, 1]).scale(&QtRational::q()));
        for b in Basis::ALL {
            let g = f.to_basis(b);
            assert_eq!(g.basis(), b);
            assert_eq!(g.to_basis(Basis::S), f);
        }
    }

    #[test]
    fn hall_pairing() {
        assert!(s(&[2, 1]).hall(&s(&[2, 1])).is_one());
        assert!(SymFun::h(3, 3).unwrap().hall(&s(&[3])).is_one());
        let p2 = SymFun::p(2, 2).unwrap();
        assert_eq!(p2.hall(&p2), QtRational::from_int(2));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(SymFun::e(3, 3).unwrap().omega(), SymFun::h(3, 3).unwrap());
        assert_eq!(s(&[2, 1]).omega(), s(&[2, 1]));
        assert_eq!(SymFun::p(2, 2).unwrap().omega(), SymFun::p(2, 2).unwrap().neg());
        assert_eq!(s(&[3, 1]).to_basis(Basis::M).omega(), s(&[2, 1, 1]));
    }

    #[test]
    fn skewing_examples() {
        assert_eq!(s(&[2, 1]).skew_h(1), s(&[2]).add(&s(&[1, 1])));
        assert_eq!(SymFun::h(4, 4).unwrap().skew_h(4), SymFun::one(4));
        assert!(s(&[1, 1]).skew_h(2).is_zero());
    }

    #[test]
    fn plethysm_examples() {
        // h_k[[n]_q] and e_k[[n]_q]
        for n in 1..=4u32 {
            for k in 0..=4u32 {
                let a = make_alphabet(&AlphabetSpec::QInt(n)).unwrap();
                let hk = plethysm_scalar(&SymFun::h(k, 4).unwrap(), &a).unwrap();
                let want = q_binomial((n + k - 1) as i64, k as i64).unwrap();
                assert_eq!(hk, QtRational::from_poly(want));
                let ek = plethysm_scalar(&SymFun::e(k, 4).unwrap(), &a).unwrap();
                let want = q_binomial(n as i64, k as i64).unwrap().shift_up(k * k.saturating_sub(1) / 2, 0);
                assert_eq!(ek, QtRational::from_poly(want));
            }
        }
        let mb1 = make_alphabet(&AlphabetSpec::MB(p(&[1]))).unwrap();
        let v = plethysm_scalar(&SymFun::p(1, 1).unwrap(), &mb1).unwrap();
        assert_eq!(v, QtRational::from_poly(m_poly()));
        assert!(make_alphabet(&AlphabetSpec::MB(Partition::empty())).is_err());
    }

    #[test]
    fn minus_eps_x_is_omega() {
        let a = make_alphabet(&AlphabetSpec::EpsX).unwrap().neg();
        let f = s(&[2, 1]).add(&SymFun::e(3, 6).unwrap().scale(&QtRational::t())).add(&s(&[2]));
        assert_eq!(plethysm(&f, &a), f.omega());
        assert_eq!(plethysm(&f, &Alphabet::x()), f);
    }

    #[test]
    fn json_round_trip() {
        let f = s(&[2, 1]).scale(&"(1 + q)/(1 - t)".parse().unwrap()).add(&s(&[3]));
        let txt = f.to_json();
        assert!(txt.starts_with(r#"{"basis":"s","degree":6,"terms":[{"partition":[2,1]"#), "{txt}");
        assert_eq!(SymFun::from_json(&txt).unwrap(), f);
    }

    #[test]
    fn text_round_trip() {
        let f = s(&[2, 1]).scale(&"(1 + q)/(1 - t)".parse().unwrap()).add(&s(&[3])).add(&SymFun::one(3));
        let txt = f.to_string();
        assert_eq!(txt.parse::<SymFun>().unwrap(), f);
        assert_eq!(SymFun::m(&Partition::new(vec![1]).unwrap(), 1).unwrap().to_string(), "m[1]");
        assert_eq!("0".parse::<SymFun>().unwrap(), SymFun::zero(Basis::S, 2));
        assert!("m[1] + s[2]".parse::<SymFun>().is_err());
        assert!("(q*m[1]".parse::<SymFun>().is_err());
    }
}
