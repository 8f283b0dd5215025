// Copyright 2026 The rsasm Authors
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

// Selectors, substitutions and the seven operators of the unranked tree
// algebra. Every result is a freshly numbered tree.

#ifndef RSASM_TREEALG_H_
#define RSASM_TREEALG_H_

#include <string>

#include "rsasm/tree.h"

namespace rsasm {

// The subtree rooted at `o`. Throws TreeError for an unknown node.
Tree Subtree(const Tree& t, NodeId o);

// subst_tc(subtree(o1), o2, hole). Throws TreeError unless `o1` is a strict
// ancestor of `o2`.
Context ContextOf(const Tree& t, NodeId o1, NodeId o2);

// Replaces the subtree at `o` by `t2`.
Tree SubstTT(const Tree& t1, NodeId o, const Tree& t2);
// Replaces the subtree at `o` by the hole. `t1` must not contain a hole.
Context SubstTC(const Tree& t1, NodeId o);
// Fills the hole of `c1` with `c2`.
Context SubstCC(const Context& c1, const Context& c2);
// Fills the hole of `c1` with `t2`.
Tree SubstCT(const Context& c1, const Tree& t2);

// A new root labelled `a` above the hedge.
Tree LabelHedge(const std::string& a, const Hedge& h);
// A new root labelled `a` above the context.
Context LabelContext(const std::string& a, const Context& c);
// `h` prepended (resp. appended) to the children of the root of `c`.
// Throws TreeError when the root is the hole itself.
Context LeftExtend(const Hedge& h, const Context& c);
Context RightExtend(const Hedge& h, const Context& c);
// The same on a plain tree; used by the extension shared updates.
Tree LeftExtendTree(const Tree& t, const Hedge& h);
Tree RightExtendTree(const Tree& t, const Hedge& h);
Hedge Concat(const Hedge& h1, const Hedge& h2);
// Splices `h` where the hole stood. For the trivial context, `h` must be a
// single tree.
Tree InjectHedge(const Context& c, const Hedge& h);
// Substitutes `c2` for the hole of `c1`.
Context InjectContext(const Context& c1, const Context& c2);

// The children of the root of `t`, as a hedge.
Hedge ChildHedge(const Tree& t);

// `t` with the node `o` replaced by the trees of `h` in its parent's child
// list. Replacing the root requires `h` to be a single tree.
Tree ReplaceNode(const Tree& t, NodeId o, const Hedge& h);

}  // namespace rsasm

#endif  // RSASM_TREEALG_H_
