// Transports for the NDJSON session protocol. The engine listens on a
// local socket; node clients (tests, tooling) use TcpTransport. A browser
// embedding needs a websocket-to-socket bridge implementing Transport.
import * as net from "node:net";

import type { Transport } from "./protocol.js";

export class TcpTransport implements Transport {
  private handler: ((line: string) => void) | null = null;
  private closeHandler: (() => void) | null = null;
  private buffer = "";

  private constructor(private readonly socket: net.Socket) {
    socket.on("data", (chunk) => {
      this.buffer += chunk.toString("utf8");
      let idx;
      while ((idx = this.buffer.indexOf("\n")) >= 0) {
        const line = this.buffer.slice(0, idx);
        this.buffer = this.buffer.slice(idx + 1);
        this.handler?.(line);
      }
    });
    socket.on("close", () => this.closeHandler?.());
    socket.on("error", () => this.closeHandler?.());
  }

  static connect(host: string, port: number): Promise<TcpTransport> {
    return new Promise((resolve, reject) => {
      const socket = net.createConnection({ host, port }, () =>
        resolve(new TcpTransport(socket)),
      );
      socket.on("error", reject);
    });
  }

  send(line: string): void {
    this.socket.write(line + "\n");
  }

  onLine(handler: (line: string) => void): void {
    this.handler = handler;
  }

  onClose(handler: () => void): void {
    this.closeHandler = handler;
  }

  close(): void {
    this.closeHandler = null;
    this.socket.end();
    this.socket.destroy();
  }
}
