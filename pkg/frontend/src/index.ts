export { FIGURES } from "./figures";
export type { FigureKind, FigureSpec } from "./figures";
export { column, columnsWithPrefix, parseCsv, readCsv } from "./csv";
export type { Table } from "./csv";
export { locateInput, renderFigure, renderTable } from "./render";
export { runCli } from "./cli";
