// Copyright 2026 The itemnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ITEMNET_NORMAL_HPP_
#define ITEMNET_NORMAL_HPP_

namespace itemnet {

/// Standard normal CDF.
double normal_cdf(double z);

/// Upper tail 1 - Phi(z), accurate far into the tail.
double normal_upper_tail(double z);

/// Inverse of normal_cdf for p in (0, 1): rational initial guess refined by
/// Newton steps against erfc, good to ~1e-14 absolute.
double normal_quantile(double p);

/// 2 * (1 - Phi(|z|)).
double two_sided_p_value(double z);

} // namespace itemnet

#endif // ITEMNET_NORMAL_HPP_
