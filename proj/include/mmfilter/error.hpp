#pragma once

#include <stdexcept>
#include <string>

namespace mmfilter {

enum class Errc {
  // data model
  MalformedRecord,
  EmbeddingCountMismatch,
  BadMagic,
  BadVersion,
  Io,
  // embedding / scoring
  DimMismatch,
  ZeroNormVector,
  MissingTextEmbedding,
  MissingImageEmbedding,
  RemoteUnavailable,
  Protocol,
  // filters
  Alignment,
  EmptyTable,
  WordlistIo,
  // stats
  BadBinSpec,
  MissingLabel,
  ChannelMismatch,
  // config
  BadRules,
  BadConfig,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace mmfilter
