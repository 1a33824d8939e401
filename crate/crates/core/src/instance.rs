use std::fmt;

use crate::error::{Error, Result};

/// The weight decision function `f_n^{k,l}`: output 0 on `|x| = k`, 1 on `|x| = l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightInstance {
    n: u32,
    k: u32,
    l: u32,
}

impl WeightInstance {
    pub fn new(n: u32, k: u32, l: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("input length n must be positive".into()));
        }
        if k >= l {
            return Err(Error::Argument(format!("need k < l, got k = {k}, l = {l}")));
        }
        if l > n {
            return Err(Error::Argument(format!(
                "need l <= n, got l = {l}, n = {n}"
            )));
        }
        Ok(Self { n, k, l })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// `(k/n, l/n)`.
    pub fn ratios(&self) -> (f64, f64) {
        let n = f64::from(self.n);
        (f64::from(self.k) / n, f64::from(self.l) / n)
    }

    /// The instance obtained by complementing every input bit: `(n, n - l, n - k)`.
    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            k: self.n - self.l,
            l: self.n - self.k,
        }
    }

    /// Function value on a promised weight, `None` off the promise.
    pub fn value(&self, weight: u32) -> Option<bool> {
        if weight == self.k {
            Some(false)
        } else if weight == self.l {
            Some(true)
        } else {
            None
        }
    }
}

impl fmt::Display for WeightInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f_{}^{{{},{}}}", self.n, self.k, self.l)
    }
}
