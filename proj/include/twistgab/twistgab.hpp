/*
   Copyright 2026 The twistgab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TWISTGAB_TWISTGAB_HPP
#define TWISTGAB_TWISTGAB_HPP

#include "base_field.hpp"
#include "codes.hpp"
#include "covering.hpp"
#include "errors.hpp"
#include "field_tower.hpp"
#include "gcoeff.hpp"
#include "json_io.hpp"
#include "linpoly.hpp"
#include "matrix.hpp"
#include "moore.hpp"
#include "mrdcheck.hpp"
#include "parallel.hpp"
#include "subspaces.hpp"

#endif  // TWISTGAB_TWISTGAB_HPP
