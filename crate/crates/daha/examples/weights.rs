//! Weight combinatorics: dominant form, rho, sigma, reduced words and the (r-1)-quotient.

use daha::weights::Weight;

fn main() {
    let l = Weight(vec![-3, 0, -9, 13]);
    let d = l.data();
    println!("lambda      {}", l);
    println!("lambda^+    {}", d.plus);
    println!("w_lambda^+  {}", d.w);
    println!("rho         {:?}", d.rho);
    println!("sigma       {:?}", d.sigma);
    println!("lambda^0    {}", l.lambda_zero());
    println!("word length {}", l.reduced_word().len());
    let (q, std) = l.quotient(4);
    println!("3-quotient  {}  standard form {}", q, std);
    println!("(2,1)-neighborhoods of (1,0,1): {}", Weight(vec![1, 0, 1]).neighborhoods(2, 1));
}
