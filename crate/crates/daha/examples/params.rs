//! Specializations: list the factors of a family and watch `zeta` and `specialize` at work.

use daha::params::{named, spec_factors, specialize, zeta_scalar, Family, ParamScalar};

fn main() -> daha::Result<()> {
    let fam = Family::Tq { k: 1, r: 2 };
    for s in spec_factors(2, fam)? {
        println!("{}", s);
        let z = ParamScalar::mono(s.v);
        let c = z.pow(2).sub(&ParamScalar::one()).div(&z.sub(&ParamScalar::one()));
        println!("  zeta(z^2 - 1) = {}", zeta_scalar(&z.pow(2).sub(&ParamScalar::one()), &s)?);
        println!("  (z^2 - 1)/(z - 1) at s=0: {}", specialize(&c, &s)?);
        println!("  t at s=0: {}", specialize(&named::t(), &s)?);
    }
    Ok(())
}
