use crate::error::{Error, Result};

/// The ambient type of a set of a GQ of order (s, s^2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    MOvoid(i64),
    ITight(i64),
}

/// Sign change from the GQ to the derived PQ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transition {
    NegNeg,
    NegPos,
    PosNeg,
    PosPos,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scenario {
    /// ∞ = P⊥, with P in I or not.
    MinusPerp { p_in_set: bool },
    /// ∞ = a hemisystem; `a2` supplies the measured value where the table
    /// leaves it free.
    Hemisystem { transition: Transition, a2: Option<i64> },
}

/// Values predicted by the tables. `count` is |I ∩ P⊥| for minus-perp and
/// |I minus H| for hemisystems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub a1: Option<i64>,
    pub a2: Option<i64>,
    pub a1_minus_a2: i64,
    pub count: Option<i64>,
}

fn exact(num: i64, den: i64, what: &str) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::Precondition(format!("{what} = {num}/{den} is not an integer")));
    }
    Ok(num / den)
}

pub fn predict_infinity_params(kind: SetKind, s: i64, scenario: Scenario) -> Result<Prediction> {
    match scenario {
        Scenario::MinusPerp { p_in_set } => {
            let (a1, a2, count) = match (kind, p_in_set) {
                (SetKind::MOvoid(m), false) => (m * (s + 1) - s, m * (s + 1), m * (s * s + 1)),
                (SetKind::MOvoid(m), true) => (m * (s + 1) - 2 * s, m * (s + 1) - s, m * (s * s + 1) - s * s),
                (SetKind::ITight(i), false) => {
                    let y = exact(i, s, "i/s")?;
                    (y, y, i)
                }
                (SetKind::ITight(i), true) => {
                    let y = exact(i - 1, s, "(i-1)/s")? + 1;
                    (y, y, i + s)
                }
            };
            Ok(Prediction { a1: Some(a1), a2: Some(a2), a1_minus_a2: a1 - a2, count: Some(count) })
        }
        Scenario::Hemisystem { transition, a2 } => {
            let half = exact(s * s + s, 2, "(s^2+s)/2")?;
            match (transition, kind) {
                (Transition::NegNeg, SetKind::MOvoid(m)) => Ok(Prediction {
                    a1: a2.map(|a| a - half),
                    a2,
                    a1_minus_a2: -half,
                    count: a2.map(|a| (m * (s * s + 1) - a) * (s + 1)),
                }),
                (Transition::NegPos, SetKind::MOvoid(m)) => {
                    let count = match a2 {
                        Some(a) => Some(exact((m * (s * s + 1) - a) * (s.pow(3) + 1), (s - 1) * (s - 1), "|I minus H|")?),
                        None => None,
                    };
                    Ok(Prediction { a1: a2.map(|a| a - 2 * half), a2, a1_minus_a2: -2 * half, count })
                }
                (Transition::PosNeg, SetKind::ITight(i)) => {
                    let a2 = exact(i, 2, "i/2")?;
                    Ok(Prediction {
                        a1: Some(a2 + half),
                        a2: Some(a2),
                        a1_minus_a2: half,
                        count: Some(exact(i * (s + 1), 2, "i(s+1)/2")?),
                    })
                }
                (Transition::PosPos, _) => {
                    Err(Error::Precondition("a positive set cannot stay positive off a hemisystem (2s = 0)".into()))
                }
                (t, k) => Err(Error::Precondition(format!("{t:?} does not apply to {k:?}"))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(kind: SetKind, p_in_set: bool) -> (i64, i64, i64) {
        let p = predict_infinity_params(kind, 3, Scenario::MinusPerp { p_in_set }).unwrap();
        (p.a1.unwrap(), p.a2.unwrap(), p.count.unwrap())
    }

    #[test]
    fn minus_perp_rows() {
        assert_eq!(mp(SetKind::MOvoid(2), false), (5, 8, 20));
        assert_eq!(mp(SetKind::MOvoid(2), true), (2, 5, 11));
        assert_eq!(mp(SetKind::ITight(3), false), (1, 1, 3));
        assert_eq!(mp(SetKind::ITight(4), true), (2, 2, 7));
    }

    #[test]
    fn non_integral_rows_are_refused() {
        assert!(predict_infinity_params(SetKind::ITight(2), 3, Scenario::MinusPerp { p_in_set: false }).is_err());
    }

    #[test]
    fn hemisystem_rows() {
        let p = predict_infinity_params(
            SetKind::ITight(4),
            3,
            Scenario::Hemisystem { transition: Transition::PosNeg, a2: None },
        )
        .unwrap();
        assert_eq!((p.a2, p.count, p.a1_minus_a2), (Some(2), Some(8), 6));
        let p = predict_infinity_params(
            SetKind::MOvoid(2),
            3,
            Scenario::Hemisystem { transition: Transition::NegNeg, a2: Some(10) },
        )
        .unwrap();
        assert_eq!((p.a1, p.count), (Some(4), Some(40)));
        assert!(predict_infinity_params(
            SetKind::ITight(4),
            3,
            Scenario::Hemisystem { transition: Transition::PosPos, a2: None }
        )
        .is_err());
    }
}
