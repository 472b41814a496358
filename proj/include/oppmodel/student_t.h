// Copyright 2026 The oppmodel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPPMODEL_STUDENT_T_H_
#define OPPMODEL_STUDENT_T_H_

namespace oppmodel {

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double RegularizedIncompleteBeta(double x, double a, double b);

// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double StudentTTwoTailedP(double t, double df);

}  // namespace oppmodel

#endif  // OPPMODEL_STUDENT_T_H_
