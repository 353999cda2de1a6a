#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace pmoe {

// A pull-based, single-consumer lazy sequence. Copies share the same
// underlying source, so pulling from one copy advances all of them.
template <class T>
class Stream {
 public:
  struct Source {
    virtual ~Source() = default;
    virtual std::optional<T> next() = 0;
  };

  Stream() = default;
  explicit Stream(std::shared_ptr<Source> src) : src_(std::move(src)) {}

  std::optional<T> next() {
    if (!src_) return std::nullopt;
    auto v = src_->next();
    if (!v) src_.reset();
    return v;
  }

  bool exhausted() const noexcept { return !src_; }

  std::vector<T> take(std::size_t n) {
    std::vector<T> out;
    while (out.size() < n) {
      auto v = next();
      if (!v) break;
      out.push_back(std::move(*v));
    }
    return out;
  }

  std::vector<T> collect() {
    std::vector<T> out;
    while (auto v = next()) out.push_back(std::move(*v));
    return out;
  }

 private:
  std::shared_ptr<Source> src_;
};

namespace detail {

template <class T, class F>
class FnSource final : public Stream<T>::Source {
 public:
  explicit FnSource(F f) : f_(std::move(f)) {}
  std::optional<T> next() override { return f_(); }

 private:
  F f_;
};

}  // namespace detail

/// Wraps a generator callable `() -> std::optional<T>`; the callable may be
/// move-only.
template <class T, class F>
Stream<T> make_stream(F f) {
  return Stream<T>(std::make_shared<detail::FnSource<T, F>>(std::move(f)));
}

template <class T>
Stream<T> empty_stream() {
  return Stream<T>();
}

template <class T>
Stream<T> single_stream(T v) {
  return make_stream<T>([v = std::optional<T>(std::move(v))]() mutable {
    std::optional<T> out;
    out.swap(v);
    return out;
  });
}

template <class T>
Stream<T> vector_stream(std::vector<T> items) {
  return make_stream<T>([items = std::move(items), i = std::size_t{0}]() mutable -> std::optional<T> {
    if (i >= items.size()) return std::nullopt;
    return std::move(items[i++]);
  });
}

template <class T, class F>
auto map_stream(Stream<T> s, F f) {
  using U = std::invoke_result_t<F&, T>;
  return make_stream<U>([s = std::move(s), f = std::move(f)]() mutable -> std::optional<U> {
    auto v = s.next();
    if (!v) return std::nullopt;
    return f(std::move(*v));
  });
}

/// Streams produced one after another; `rest` is built lazily when `first`
/// runs out.
template <class T, class G>
Stream<T> concat_lazy(Stream<T> first, G make_rest) {
  return make_stream<T>([first = std::move(first), make_rest = std::move(make_rest),
                         rest = std::optional<Stream<T>>()]() mutable -> std::optional<T> {
    if (!rest) {
      if (auto v = first.next()) return v;
      rest = make_rest();
    }
    return rest->next();
  });
}

}  // namespace pmoe
