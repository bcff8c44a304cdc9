//! Parsing of words, vectors and data from command-line strings.

use affweyl::{
    AffineElement, AffineWeyl, CoweightVector, DiagramAutomorphism, Error, FrobeniusDatum, Q,
    RootSystem, Weyl, WeylElement,
};

use crate::{DatumArgs, TypeArgs};

/// A word given either as a digit string (`121`) or comma-separated labels.
pub fn parse_word(s: &str) -> Result<Vec<usize>, Error> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    let bad = |t: &str| Error::Parse(format!("bad label {t:?} in word {s:?}"));
    if s.contains(',') || s.contains(' ') {
        s.split(|c| c == ',' || c == ' ')
            .filter(|t| !t.is_empty())
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad(t)))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad(&c.to_string())))
            .collect()
    }
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

pub fn parse_ints(s: &str, rank: usize) -> Result<Vec<i64>, Error> {
    let v: Vec<i64> = split_list(s)
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad integer {t:?}"))))
        .collect::<Result<_, _>>()?;
    check_len(v, rank)
}

pub fn parse_coweight(s: &str, rank: usize) -> Result<CoweightVector, Error> {
    let v: Vec<Q> = split_list(s)
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad rational {t:?}"))))
        .collect::<Result<_, _>>()?;
    Ok(CoweightVector(check_len(v, rank)?))
}

fn check_len<T>(v: Vec<T>, rank: usize) -> Result<Vec<T>, Error> {
    if v.len() != rank {
        return Err(Error::Dimension {
            expected: rank,
            got: v.len(),
        });
    }
    Ok(v)
}

pub fn root_system(ty: &TypeArgs) -> Result<RootSystem, Error> {
    RootSystem::new(ty.letter, ty.rank)
}

pub fn affine(ty: &TypeArgs) -> Result<AffineWeyl, Error> {
    Ok(AffineWeyl::new(Weyl::new(root_system(ty)?)))
}

pub fn datum(rs: &RootSystem, args: &DatumArgs) -> Result<FrobeniusDatum, Error> {
    let s = DiagramAutomorphism::by_name(&rs.datum, &args.sigma0)?;
    FrobeniusDatum::new(rs, args.tau, s)
}

pub fn finite(weyl: &Weyl, word: &str) -> Result<WeylElement, Error> {
    weyl.from_word(&parse_word(word)?)
}

/// `t^lambda w` from a rational coweight and a finite word.
pub fn affine_element(
    aff: &AffineWeyl,
    lambda: Option<&str>,
    word: &str,
) -> Result<AffineElement, Error> {
    let w = finite(aff.weyl(), word)?;
    let t = match lambda {
        Some(l) => aff.translation_coweight(&parse_coweight(l, aff.rank())?)?,
        None => aff.identity(),
    };
    Ok(aff.mul(&t, &aff.finite(w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        assert_eq!(parse_word("121").unwrap(), vec![1, 2, 1]);
        assert_eq!(parse_word("1, 2,10").unwrap(), vec![1, 2, 10]);
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("1x").is_err());
    }

    #[test]
    fn vectors() {
        let v = parse_coweight("1/2, 0, 1", 3).unwrap();
        assert_eq!(v.display_coroots(), "1/2 a1v + a3v");
        assert!(matches!(
            parse_ints("1,2", 3),
            Err(Error::Dimension { expected: 3, got: 2 })
        ));
    }
}
