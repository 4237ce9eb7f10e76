use crate::{Error, Result};

const SQRT_PI: f64 = 1.772_453_850_905_516_f64;

/// `Γ(two_z / 2)` for a positive integer `two_z`, from `Γ(1/2) = √π`,
/// `Γ(1) = 1` and `Γ(z+1) = zΓ(z)`.
pub fn gamma_half_integer(two_z: u32) -> Result<f64> {
    if two_z == 0 {
        return Err(Error::InvalidParameter {
            name: "two_z",
            value: 0.0,
            reason: "Γ is evaluated only at positive arguments",
        });
    }
    let (mut acc, mut z) = if two_z.is_multiple_of(2) { (1.0, 1.0) } else { (SQRT_PI, 0.5) };
    let target = two_z as f64 / 2.0;
    while z < target {
        acc *= z;
        z += 1.0;
    }
    Ok(acc)
}
