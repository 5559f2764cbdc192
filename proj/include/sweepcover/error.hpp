#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sweepcover {

enum class Errc {
  // Tree documents.
  EmptyDocument,
  MalformedLine,
  InvalidLabel,
  DuplicateEdge,
  NodeWithTwoParents,
  MultipleRoots,
  CycleDetected,
  UnknownNode,
  // Cover algebra.
  EmptyBlock,
  NotASingletonMember,
  NotAPartitionOfChildren,
  LeafNode,
  InvalidCover,
  BadSelection,
  // Enumeration and counting.
  InvalidN,
  InvalidParams,
  NonIntegerResult,
};

std::string_view to_string(Errc code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

  // True for failures caused by a malformed input document rather than by
  // bad numeric parameters or inconsistent arguments.
  bool is_parse_error() const noexcept;

 private:
  Errc code_;
};

}  // namespace sweepcover
