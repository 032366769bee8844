use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_SCALE: u8 = 6;
/// Integer parts must stay below this bound (one quadrillion).
pub const INTEGER_LIMIT: u128 = 1_000_000_000_000_000;

/// Exact decimal: `(-1)^negative * mantissa * 10^-scale`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NumericValue {
    mantissa: u128,
    scale: u8,
    negative: bool,
}

impl NumericValue {
    pub fn new(mantissa: u128, scale: u8) -> Result<Self> {
        if scale > MAX_SCALE {
            return Err(Error::contract(format!("scale {scale} exceeds {MAX_SCALE}")));
        }
        let v = NumericValue { mantissa, scale, negative: false };
        if v.integer_part() >= INTEGER_LIMIT {
            return Err(Error::contract(format!("value {v} out of range")));
        }
        Ok(v)
    }

    pub fn integer(n: u64) -> Self {
        NumericValue { mantissa: n as u128, scale: 0, negative: false }
    }

    pub fn negated(self) -> Self {
        NumericValue { negative: !self.negative, ..self }
    }

    pub fn mantissa(&self) -> u128 {
        self.mantissa
    }

    pub fn scale(&self) -> u8 {
        self.scale
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn is_integer(&self) -> bool {
        self.scale == 0
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0
    }

    pub fn integer_part(&self) -> u128 {
        self.mantissa / 10u128.pow(self.scale as u32)
    }

    /// Fractional digits, zero-padded to exactly `scale` characters.
    pub fn fraction_digits(&self) -> String {
        if self.scale == 0 {
            return String::new();
        }
        let frac = self.mantissa % 10u128.pow(self.scale as u32);
        format!("{:0width$}", frac, width = self.scale as usize)
    }

    /// Integer value if this is a whole number that fits in `u64`.
    pub fn as_u64(&self) -> Option<u64> {
        if self.scale == 0 && !self.negative {
            u64::try_from(self.mantissa).ok()
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        let v = self.mantissa as f64 / 10f64.powi(self.scale as i32);
        if self.negative {
            -v
        } else {
            v
        }
    }
}

impl fmt::Display for NumericValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        write!(f, "{}", self.integer_part())?;
        if self.scale > 0 {
            write!(f, ".{}", self.fraction_digits())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PeriodHint {
    Morning,
    Afternoon,
    Evening,
    Night,
    ExplicitAm,
    ExplicitPm,
    Unspecified,
}

impl PeriodHint {
    pub fn is_after_noon(self) -> bool {
        matches!(
            self,
            PeriodHint::Afternoon | PeriodHint::Evening | PeriodHint::Night | PeriodHint::ExplicitPm
        )
    }

    pub fn is_before_noon(self) -> bool {
        matches!(self, PeriodHint::Morning | PeriodHint::ExplicitAm)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TimeOfDay {
    pub hour: u8,
    pub minute: u8,
    pub period: PeriodHint,
}

impl TimeOfDay {
    pub fn new(hour: u8, minute: u8, period: PeriodHint) -> Result<Self> {
        if hour > 23 || minute > 59 {
            return Err(Error::contract(format!("invalid time {hour}:{minute:02}")));
        }
        Ok(TimeOfDay { hour, minute, period })
    }

    pub fn hm(hour: u8, minute: u8) -> Self {
        Self::new(hour, minute, PeriodHint::Unspecified).expect("valid time")
    }
}
