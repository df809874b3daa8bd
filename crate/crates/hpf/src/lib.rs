//! Heterogeneous policy fusion for cooperative multi-agent RL.
//!
//! Two value-decomposition learners (a surrogate-target learner such as
//! weighted QMIX or QPLEX, and a representation-constrained learner such as
//! QMIX or VDN) are extended into a policy set. At every environment step the
//! set is sampled through a Boltzmann rule over the candidates' value
//! estimates, and a KL constraint pulls the constrained learner's per-agent
//! policies toward the surrogate-target learner's. Everything runs on a small
//! built-in reverse-mode autodiff over dense f32 tensors.

pub mod agents;
pub mod autodiff;
pub mod envs;
pub mod fusion;
pub mod harness;
pub mod mixers;
pub mod policy;
pub mod replay;
