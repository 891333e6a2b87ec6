#include "lucas/exchange.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <future>
#include <sstream>
#include <thread>

#include "lucas/error.hpp"
#include "lucas/formats.hpp"

namespace lucas {

std::string encode_frame(std::string_view payload) {
  if (payload.size() > 0xFFFFFFFFU) throw Error(Errc::Parse, "payload too large for a frame");
  const auto n = static_cast<std::uint32_t>(payload.size());
  std::string out;
  out.reserve(4 + payload.size());
  out.push_back(static_cast<char>((n >> 24) & 0xFF));
  out.push_back(static_cast<char>((n >> 16) & 0xFF));
  out.push_back(static_cast<char>((n >> 8) & 0xFF));
  out.push_back(static_cast<char>(n & 0xFF));
  out.append(payload);
  return out;
}

std::optional<std::string> decode_frame(std::string_view bytes, std::size_t* consumed) {
  if (bytes.size() < 4) return std::nullopt;
  std::uint32_t n = 0;
  for (int i = 0; i < 4; ++i) n = (n << 8) | static_cast<unsigned char>(bytes[static_cast<std::size_t>(i)]);
  if (bytes.size() - 4 < n) return std::nullopt;
  if (consumed) *consumed = 4 + static_cast<std::size_t>(n);
  return std::string(bytes.substr(4, n));
}

std::string key_digest(const ResidueMatrix& key) {
  // FNV-1a over the decimal rendering
  std::ostringstream os;
  os << key;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : os.str()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

namespace {

class Socket {
 public:
  explicit Socket(int fd) : fd_(fd) {}
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;
  Socket(Socket&& other) noexcept : fd_(std::exchange(other.fd_, -1)) {}
  ~Socket() {
    if (fd_ >= 0) ::close(fd_);
  }
  int fd() const noexcept { return fd_; }

 private:
  int fd_;
};

[[noreturn]] void fail(const std::string& what) {
  throw Error(Errc::Io, what + ": " + std::strerror(errno));
}

void send_all(const Socket& s, std::string_view bytes) {
  while (!bytes.empty()) {
    const ssize_t n = ::send(s.fd(), bytes.data(), bytes.size(), MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      fail("send");
    }
    bytes.remove_prefix(static_cast<std::size_t>(n));
  }
}

std::string recv_frame(const Socket& s) {
  std::string buffer;
  char chunk[4096];
  while (true) {
    std::size_t used = 0;
    if (auto payload = decode_frame(buffer, &used)) return *payload;
    const ssize_t n = ::recv(s.fd(), chunk, sizeof chunk, 0);
    if (n < 0) {
      if (errno == EINTR) continue;
      fail("recv");
    }
    if (n == 0) throw Error(Errc::Io, "connection closed before a full frame arrived");
    buffer.append(chunk, static_cast<std::size_t>(n));
  }
}

sockaddr_in loopback(std::uint16_t port) {
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  return addr;
}

Socket listen_loopback(std::uint16_t port, std::uint16_t* bound_port) {
  Socket s(::socket(AF_INET, SOCK_STREAM, 0));
  if (s.fd() < 0) fail("socket");
  const int one = 1;
  ::setsockopt(s.fd(), SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  sockaddr_in addr = loopback(port);
  if (::bind(s.fd(), reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
    fail("bind 127.0.0.1:" + std::to_string(port));
  }
  if (::listen(s.fd(), 1) != 0) fail("listen");
  socklen_t len = sizeof addr;
  if (::getsockname(s.fd(), reinterpret_cast<sockaddr*>(&addr), &len) != 0) fail("getsockname");
  *bound_port = ntohs(addr.sin_port);
  return s;
}

Socket connect_loopback(std::uint16_t port) {
  Socket s(::socket(AF_INET, SOCK_STREAM, 0));
  if (s.fd() < 0) fail("socket");
  sockaddr_in addr = loopback(port);
  if (::connect(s.fd(), reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
    fail("connect 127.0.0.1:" + std::to_string(port));
  }
  return s;
}

std::string trim_padding(std::string text) {
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

std::string shift_text(const SymbolStream& b) { return "[" + format_symbols(b) + "]"; }

struct ReceiverLog {
  std::vector<std::string> lines;
  std::optional<std::uint64_t> lambda;
  std::string received_payload;
  std::string reply_payload;
};

// Bob: accept one connection, answer one frame, exit.
ReceiverLog serve_once(Socket listener, const SecretKey& sk) {
  ReceiverLog log;
  sockaddr_in peer{};
  socklen_t len = sizeof peer;
  Socket conn(::accept(listener.fd(), reinterpret_cast<sockaddr*>(&peer), &len));
  if (conn.fd() < 0) fail("accept");

  log.received_payload = recv_frame(conn);
  const Envelope env = parse_envelope(log.received_payload);
  log.lines.push_back("[bob] received frame: s=" + std::to_string(env.s) + ", " +
                      std::to_string(env.ciphertext.size()) + " symbols");

  Envelope reply{env.s, {}};
  try {
    const SessionParams session = recover_session(env.s, sk);
    log.lambda = static_cast<std::uint64_t>(session.lambda());
    log.lines.push_back("[bob] recovered lambda=" + std::to_string(session.lambda()) +
                        " K digest=" + key_digest(session.key_matrix()) + " B=" + shift_text(session.shift()));
    reply.ciphertext = decrypt(env.ciphertext, session);
    log.lines.push_back("[bob] plaintext: " + decode_text(reply.ciphertext));
  } catch (const Error& err) {
    log.lines.push_back(std::string("[bob] recovery failed: ") + err.what());
    reply.ciphertext.clear();
  }
  log.reply_payload = format_envelope(reply);
  send_all(conn, encode_frame(log.reply_payload));
  return log;
}

}  // namespace

ExchangeResult run_exchange_demo(const ExchangeConfig& config) {
  ExchangeResult result;
  const Prime p(config.p);
  const KeyPair bob_keys = keygen(p, Residue(config.alpha, p), config.d);
  const SecretKey bob_secret{p, config.receiver_d.value_or(config.d)};
  result.transcript.push_back("[bob] public key pk(" + std::to_string(p.value()) + "," +
                              std::to_string(bob_keys.pub.e1.value()) + "," +
                              std::to_string(bob_keys.pub.e2.value()) + ")");

  // Alice prepares everything before touching the network so that a bad
  // parameter never leaves the listener waiting.
  const SessionParams session = derive_session(bob_keys.pub, config.e);
  result.sender_lambda = static_cast<std::uint64_t>(session.lambda());
  const Envelope envelope{session.s(), encrypt(pad_blocks(encode_text(config.message), session.lambda()), session)};
  const std::string payload = format_envelope(envelope);
  result.transcript.push_back("[alice] s=" + std::to_string(session.s()) + " lambda=" +
                              std::to_string(session.lambda()) + " K digest=" + key_digest(session.key_matrix()) +
                              " B=" + shift_text(session.shift()));
  result.transcript.push_back("[alice] ciphertext: " + decode_text(envelope.ciphertext));

  std::uint16_t port = 0;
  Socket listener = listen_loopback(config.port, &port);
  std::packaged_task<ReceiverLog(Socket, SecretKey)> bob(serve_once);
  auto bob_done = bob.get_future();
  std::thread bob_thread(std::move(bob), std::move(listener), bob_secret);

  std::string reply_payload;
  try {
    Socket conn = connect_loopback(port);
    send_all(conn, encode_frame(payload));
    result.transcript.push_back("[alice] sent frame (" + std::to_string(payload.size()) + " byte payload) on port " +
                                std::to_string(port));
    reply_payload = recv_frame(conn);
  } catch (...) {
    // Unblock accept() if we never connected, then rethrow.
    if (bob_done.wait_for(std::chrono::seconds(0)) != std::future_status::ready) {
      try {
        Socket poke = connect_loopback(port);
      } catch (...) {
      }
    }
    bob_thread.join();
    throw;
  }
  bob_thread.join();
  ReceiverLog bob_log = bob_done.get();

  result.wire_payloads = {bob_log.received_payload, bob_log.reply_payload};
  result.receiver_lambda = bob_log.lambda;
  result.transcript.insert(result.transcript.end(), bob_log.lines.begin(), bob_log.lines.end());

  const Envelope reply = parse_envelope(reply_payload);
  result.recovered = trim_padding(decode_text(reply.ciphertext));
  const std::string expected = trim_padding(decode_text(encode_text(config.message)));
  result.match = bob_log.lambda == result.sender_lambda && result.recovered == expected;
  result.transcript.push_back("[alice] sender lambda=" + std::to_string(result.sender_lambda) + " receiver lambda=" +
                              (bob_log.lambda ? std::to_string(*bob_log.lambda) : std::string("none")));
  result.transcript.push_back(result.match ? "MATCH: " + result.recovered
                                           : "MISMATCH: expected '" + expected + "', got '" + result.recovered + "'");
  return result;
}

}  // namespace lucas
