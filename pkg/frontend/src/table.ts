// Pagination helper for the intersection browser.

export interface Page<T> {
  rows: T[];
  page: number; // zero-based, clamped
  pages: number;
  total: number;
}

export function paginate<T>(rows: T[], page: number, perPage: number): Page<T> {
  const pages = Math.max(1, Math.ceil(rows.length / perPage));
  const clamped = Math.min(Math.max(page, 0), pages - 1);
  return {
    rows: rows.slice(clamped * perPage, (clamped + 1) * perPage),
    page: clamped,
    pages,
    total: rows.length,
  };
}
