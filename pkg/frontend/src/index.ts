export { SessionClient, SessionError } from "./protocol.js";
export type {
  ConfigDoc,
  GameStateResult,
  PlacementDoc,
  Transport,
  ValidateResult,
  Violation,
} from "./protocol.js";
export { TcpTransport } from "./transport.js";
export { BoardView, scoreBand } from "./view.js";
export type { PendingPlacement, PreviewVerdict, Rotation } from "./view.js";
export { render } from "./dom.js";
