// Copyright 2026 The lcgen Authors.
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

#ifndef LC_CHURCH_HPP_
#define LC_CHURCH_HPP_

#include "lc/term.hpp"

namespace lc {

// Translates a sugared term into the untyped calculus:
//
//   ()          \a -> a
//   True        \t -> \f -> t
//   False       \t -> \f -> f
//   ite c a b   c a b
//   []          \c -> \n -> n
//   h : t       (\h -> \t -> \c -> \n -> c h (t c n)) h t
//   foldr f e l l f e
//
// Closed inputs come back with every binder renumbered in preorder, so source
// and encoder binders share one global x0, x1, ... sequence. Open inputs keep
// their names and introduced binders are numbered above the input's maximum.
Term church_encode(const Term& t);

}  // namespace lc

#endif  // LC_CHURCH_HPP_
