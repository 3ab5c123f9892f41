//! Published E8 reference data: the closed forms and printed values that the
//! verification suites compare computed results against.

use std::f64::consts::PI;

use crate::exact_poly::RationalPolynomial;

pub const COXETER_NUMBER: usize = 30;
pub const EXPONENTS: [u32; 8] = [1, 7, 11, 13, 17, 19, 23, 29];
pub const MARKS: [i64; 8] = [2, 3, 4, 5, 6, 4, 2, 3];

/// `2I - C` in node order.
pub const ADJACENCY: [[i64; 8]; 8] = [
    [0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 1, 0, 1],
    [0, 0, 0, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
];

/// Perron–Frobenius components to four decimals, `u_5 = 1`.
pub const PERRON_PRINTED: [f64; 8] = [0.2091, 0.4158, 0.6180, 0.8135, 1.0, 0.6728, 0.3383, 0.5028];

/// Nodes (1-based) whose squared masses are the roots of
/// `P1 = x^4 - 30x^3 + 240x^2 - 720x + 720`.
pub const P1_NODES: [usize; 4] = [2, 5, 7, 8];
/// Nodes whose squared masses are the roots of
/// `P2 = x^4 - 30x^3 + 300x^2 - 1080x + 720`.
pub const P2_NODES: [usize; 4] = [1, 3, 4, 6];
/// The partition as usually quoted alongside the factorization assigns
/// `{1,3,4,6}` to `P1`; numerically it is the other way round.
pub const QUOTED_P1_NODES: [usize; 4] = [1, 3, 4, 6];

/// Mass ratios equal to the golden ratio, as `(numerator node, denominator node)`.
pub const GOLDEN_PAIRS: [(usize, usize); 4] = [(7, 1), (6, 2), (5, 3), (4, 8)];

pub const GOLDEN_RATIO: f64 = 1.618_033_988_749_895;

pub fn theta() -> f64 {
    PI / COXETER_NUMBER as f64
}

/// `x^8 - 7x^6 + 14x^4 - 8x^2 + 1`
pub fn adjacency_char_poly() -> RationalPolynomial {
    RationalPolynomial::from_descending(&[1, 0, -7, 0, 14, 0, -8, 0, 1])
}

/// Characteristic polynomial of the mass matrix.
pub fn mass_char_poly() -> RationalPolynomial {
    RationalPolynomial::from_descending(&[
        1, -60, 1440, -18000, 127440, -518400, 1166400, -1296000, 518400,
    ])
}

/// First quartic factor of [`mass_char_poly`]; its roots are `m_j^2` for
/// `j` in [`P1_NODES`].
pub fn mass_factor_p1() -> RationalPolynomial {
    RationalPolynomial::from_descending(&[1, -30, 240, -720, 720])
}

/// Second quartic factor; roots `m_j^2` for `j` in [`P2_NODES`].
pub fn mass_factor_p2() -> RationalPolynomial {
    RationalPolynomial::from_descending(&[1, -30, 300, -1080, 720])
}

/// Closed-form Perron–Frobenius vector with `u_1 = 2 sin(theta)`.
pub fn perron_closed_form() -> [f64; 8] {
    let s = |k: f64| (k * theta()).sin();
    [
        2.0 * s(1.0),
        2.0 * s(2.0),
        2.0 * s(3.0),
        2.0 * s(4.0),
        2.0 * s(5.0),
        s(2.0) / s(3.0),
        s(1.0) / s(3.0),
        s(1.0) / s(2.0),
    ]
}

/// `M = 2 sqrt(3) sin(6 theta) / sin(theta)`, the ratio `m_j^2 / u_j^2`.
pub fn mass_scale_closed_form() -> f64 {
    2.0 * 3f64.sqrt() * (6.0 * theta()).sin() / theta().sin()
}

/// Radical forms of the four positive eigenvalues of `2I - C`, in printed
/// order `x_1..x_4`.
pub const EIGENVALUE_RADICALS: [&str; 4] = [
    "1/2*sqrt(7 + sqrt(5) + sqrt(30 + 6*sqrt(5)))",
    "1/2*sqrt(7 + sqrt(5) - sqrt(30 + 6*sqrt(5)))",
    "1/2*sqrt(7 - sqrt(5) + sqrt(30 - 6*sqrt(5)))",
    "1/2*sqrt(7 - sqrt(5) - sqrt(30 - 6*sqrt(5)))",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trig {
    Cos,
    Sin,
}

/// `2 trig(pi / divisor) = radical`.
#[derive(Debug, Clone, Copy)]
pub struct TrigRadical {
    pub trig: Trig,
    pub divisor: u32,
    pub radical: &'static str,
    pub note: Option<&'static str>,
}

impl TrigRadical {
    pub fn name(&self) -> String {
        let f = match self.trig {
            Trig::Cos => "cos",
            Trig::Sin => "sin",
        };
        format!("2{f}(pi/{})", self.divisor)
    }

    pub fn exact_value(&self) -> f64 {
        let a = PI / self.divisor as f64;
        2.0 * match self.trig {
            Trig::Cos => a.cos(),
            Trig::Sin => a.sin(),
        }
    }
}

pub const TRIG_RADICALS: [TrigRadical; 8] = [
    TrigRadical {
        trig: Trig::Cos,
        divisor: 5,
        radical: "1/2*(1 + sqrt(5))",
        note: None,
    },
    TrigRadical {
        trig: Trig::Sin,
        divisor: 5,
        radical: "sqrt((5 - sqrt(5))/2)",
        note: None,
    },
    TrigRadical {
        trig: Trig::Cos,
        divisor: 10,
        radical: "sqrt((5 + sqrt(5))/2)",
        note: None,
    },
    TrigRadical {
        trig: Trig::Sin,
        divisor: 10,
        radical: "sqrt((3 - sqrt(5))/2)",
        note: None,
    },
    TrigRadical {
        trig: Trig::Cos,
        divisor: 15,
        radical: "1/2*sqrt(9 + sqrt(5) + 2*sqrt(3)*sqrt((5 - sqrt(5))/2))",
        note: None,
    },
    TrigRadical {
        trig: Trig::Sin,
        divisor: 15,
        radical: "1/2*sqrt(7 - sqrt(5) - 2*sqrt(3)*sqrt((5 - sqrt(5))/2))",
        note: None,
    },
    TrigRadical {
        trig: Trig::Cos,
        divisor: 30,
        radical: "1/2*sqrt(7 + sqrt(5) + 2*sqrt(3)*sqrt((5 + sqrt(5))/2))",
        note: Some(
            "printed with a stray comma after sqrt(5); read as a single radicand like its siblings",
        ),
    },
    TrigRadical {
        trig: Trig::Sin,
        divisor: 30,
        radical: "1/2*sqrt(9 - sqrt(5) - 2*sqrt(3)*sqrt((5 + sqrt(5))/2))",
        note: None,
    },
];

/// Radical expressions printed for the squared masses, keyed by node. They
/// evaluate to `m_j / sqrt(2)`, i.e. `2 e_j^2 = m_j^2`.
pub const MASS_RADICALS: [(usize, &str); 8] = [
    (
        5,
        "1/2*sqrt(15 + 3*sqrt(5) + sqrt(6)*sqrt(25 + 11*sqrt(5)))",
    ),
    (
        7,
        "1/2*sqrt(15 + 3*sqrt(5) - sqrt(6)*sqrt(25 + 11*sqrt(5)))",
    ),
    (
        8,
        "1/2*sqrt(15 - 3*sqrt(5) + sqrt(6)*sqrt(25 - 11*sqrt(5)))",
    ),
    (
        2,
        "1/2*sqrt(15 - 3*sqrt(5) - sqrt(6)*sqrt(25 - 11*sqrt(5)))",
    ),
    (4, "1/2*sqrt(15 + 3*sqrt(5) + sqrt(6)*sqrt(5 - sqrt(5)))"),
    (6, "1/2*sqrt(15 + 3*sqrt(5) - sqrt(6)*sqrt(5 - sqrt(5)))"),
    (3, "1/2*sqrt(15 - 3*sqrt(5) + sqrt(6)*sqrt(5 + sqrt(5)))"),
    (1, "1/2*sqrt(15 - 3*sqrt(5) - sqrt(6)*sqrt(5 + sqrt(5)))"),
];
