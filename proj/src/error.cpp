#include "mmfilter/error.hpp"

namespace mmfilter {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedRecord: return "MalformedRecord";
    case Errc::EmbeddingCountMismatch: return "EmbeddingCountMismatch";
    case Errc::BadMagic: return "BadMagic";
    case Errc::BadVersion: return "BadVersion";
    case Errc::Io: return "IoError";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::ZeroNormVector: return "ZeroNormVector";
    case Errc::MissingTextEmbedding: return "MissingTextEmbedding";
    case Errc::MissingImageEmbedding: return "MissingImageEmbedding";
    case Errc::RemoteUnavailable: return "RemoteUnavailable";
    case Errc::Protocol: return "ProtocolError";
    case Errc::Alignment: return "AlignmentError";
    case Errc::EmptyTable: return "EmptyTable";
    case Errc::WordlistIo: return "WordlistIoError";
    case Errc::BadBinSpec: return "BadBinSpec";
    case Errc::MissingLabel: return "MissingLabel";
    case Errc::ChannelMismatch: return "ChannelMismatch";
    case Errc::BadRules: return "BadRules";
    case Errc::BadConfig: return "BadConfig";
  }
  return "Error";
}

}  // namespace mmfilter
